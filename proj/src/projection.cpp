// populated in later commits
