# Sphinx configuration of the provar documentation.
# Options: https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys
sys.path.insert(0, os.path.abspath('../..'))

project = 'provar'
copyright = '2020, provar developers'
author = 'provar developers'
release = '1.0.0'

extensions = ["sphinx_rtd_theme", "sphinx.ext.todo", "sphinx.ext.napoleon", "sphinx.ext.viewcode"]

# pages included by developer_documentation.rst
exclude_patterns = ['developer/project_structure.rst', 'developer/software_architecture.rst',
                    'developer/extending.rst']

html_show_sourcelink = False
html_theme = 'sphinx_rtd_theme'

# numpy style docstrings
napoleon_google_docstring = False
napoleon_numpy_docstring = True
napoleon_include_init_with_doc = True
napoleon_include_private_with_doc = False
napoleon_include_special_with_doc = True
napoleon_use_param = True
napoleon_use_rtype = False
