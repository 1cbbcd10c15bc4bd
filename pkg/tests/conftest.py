import hypothesis

hypothesis.settings.register_profile("tweetsift", deadline=None)
hypothesis.settings.load_profile("tweetsift")
