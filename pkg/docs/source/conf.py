# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
#
# This file does only contain a selection of the most common options. For a
# full list see the documentation:
# http://www.sphinx-doc.org/en/stable/config

import datetime
import os
import sys

# -- Path setup --------------------------------------------------------------
_prj_root = os.path.dirname(__file__)
_prj_root = os.path.relpath(os.path.join('..', '..', 'lib'), _prj_root)
_prj_root = os.path.abspath(_prj_root)
sys.path.insert(1, _prj_root)
import uav_planner

# -- Project information -----------------------------------------------------
project = 'UAV Planner'
copyright = "{.year}, the UAV Planner developers".format(datetime.datetime.now())
author = 'the UAV Planner developers'

# The short X.Y.Z version
version = uav_planner.__version__
# The full version, including alpha/beta/rc tags
release = version


# -- General configuration ---------------------------------------------------
add_module_names = False

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.coverage',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
]

# Add any paths that contain templates here, relative to this directory.
templates_path = ['_templates']

# The suffix(es) of source filenames.
source_suffix = '.rst'

# The master toctree document.
master_doc = 'index'

# The language for content autogenerated by Sphinx.
language = 'en'

# List of patterns, relative to source directory, that match files and
# directories to ignore when looking for source files.
exclude_patterns = []

# The name of the Pygments (syntax highlighting) style to use.
pygments_style = 'sphinx'


# -- Options for HTML output -------------------------------------------------
html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']

# -- Options for HTMLHelp output ---------------------------------------------
htmlhelp_basename = 'UAVPlannerdoc'


# -- Options for LaTeX output ------------------------------------------------
latex_documents = [
    (master_doc, 'UAVPlanner.tex', 'UAV Planner Documentation', author, 'manual'),
]

# -- Options for manual page output ------------------------------------------
man_pages = [
    (master_doc, 'uav-planner', 'UAV Planner Documentation', [author], 1)
]


# -- Extension configuration -------------------------------------------------
intersphinx_mapping = {
    'dateutil': ('https://dateutil.readthedocs.io/en/stable/', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'pandas': ('https://pandas.pydata.org/docs/', None),
    'python': ("https://docs.python.org/{version.major}.{version.minor}".format(version=sys.version_info), None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None)
}

def setup(app):
    app.add_css_file('theme_overrides.css')
