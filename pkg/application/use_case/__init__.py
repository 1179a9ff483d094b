# Use cases package