import functools
import subprocess

import config


@functools.lru_cache(maxsize=1)
def version_string():
    """`git describe` of the source tree, or the package version outside a checkout."""
    try:
        out = subprocess.run(
            ["git", "describe", "--always", "--dirty"],
            cwd=config.BASE_DIR, capture_output=True, text=True, timeout=5, check=True,
        )
        described = out.stdout.strip()
        if described:
            return f"{config.VERSION}+{described}"
    except (OSError, subprocess.SubprocessError):
        pass
    return config.VERSION
