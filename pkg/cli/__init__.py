"""Command-line front end over structure-definition documents."""
