"""Import root for the lpt library (``lib.lpt``)."""
