# Командная строка
