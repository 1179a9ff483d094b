# Presentation layer package