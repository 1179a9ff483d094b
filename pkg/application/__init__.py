# Application layer package