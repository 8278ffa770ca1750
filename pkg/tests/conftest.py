# shared fixture helpers import as plain modules from this directory
