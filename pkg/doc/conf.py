# -*- coding: utf-8 -*-
#
# PYPERMSEARCH documentation build configuration file.

import sys, os

sys.path.insert(0, os.path.abspath('..'))

extensions = ['sphinx.ext.autodoc']

templates_path = ['.templates']

source_suffix = '.rst'

master_doc = 'index'

# General information about the project.
project = u'PYPERMSEARCH'
copyright = u'2026, PYPERMSEARCH Developers'

# The short X.Y version.
version = '1.0'
# The full version, including alpha/beta/rc tags.
release = '1.0.0'

exclude_trees = ['.build']

pygments_style = 'sphinx'

html_theme = 'default'

html_static_path = ['.static']

htmlhelp_basename = 'PYPERMSEARCHdoc'

latex_documents = [
  ('index', 'PYPERMSEARCH.tex', u'PYPERMSEARCH Documentation',
   u'PYPERMSEARCH Developers', 'manual'),
]
