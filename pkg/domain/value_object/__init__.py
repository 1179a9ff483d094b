# Value objects package
