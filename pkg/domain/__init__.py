# Entities package