# Infrastructure layer package