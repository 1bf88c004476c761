"""F-index verification workbench for unicyclic graphs."""
