from hypothesis import settings

settings.register_profile("twistdance", deadline=None, max_examples=60)
settings.load_profile("twistdance")
