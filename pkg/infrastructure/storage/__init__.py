# Чтение входных файлов
