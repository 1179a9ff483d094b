# Handlers package