namespace abcat {}
