import os
import sys

sys.path.insert(0, os.path.abspath('../..'))

import k3focal  # noqa: E402

project = k3focal.__name__
release = k3focal.__version__
copyright = '2020, k3focal authors'

extensions = [
    "sphinx.ext.autodoc",
    'sphinx.ext.napoleon',
]

templates_path = ['_templates']

exclude_patterns = []

master_doc = "index"

html_theme = 'alabaster'

html_static_path = []
