# Monitoring package