def test_import():
    import periodica  # noqa: F401
