from hypothesis import settings

settings.register_profile("cliffchar", deadline=None, max_examples=50)
settings.load_profile("cliffchar")
