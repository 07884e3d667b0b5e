# Makes the shared oracle and corpus helpers importable from every test module.
