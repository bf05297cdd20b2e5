# Configuration file for the Sphinx documentation builder.
#
# http://www.sphinx-doc.org/en/master/config

# -- Project information -----------------------------------------------------

project = 'gsqgpatch'
copyright = '2026, gsqgpatch developers'
author = 'gsqgpatch developers'

version = '0.1'
release = '0.1.0'


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.coverage',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
    'sphinx.ext.viewcode',
    'sphinx.ext.autosummary',
    'sphinx_automodapi.automodapi',
]

source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = ['.build', 'Thumbs.db', '.DS_Store']

# Docstrings use Google style sections.
napoleon_google_docstring = True
napoleon_numpy_docstring = False

# Doctests in the docstrings expect these names.
doctest_global_setup = '''
import numpy
import gsqgpatch
'''


# -- Options for HTML output -------------------------------------------------

html_theme = 'alabaster'
html_theme_options = {
    "description": "Vortex-patch pairs for generalized SQG",
}
html_sidebars = {
    '**': [
        'about.html',
        'navigation.html',
        'relations.html',
        'searchbox.html',
    ]
}
htmlhelp_basename = 'gsqgpatchdoc'


# -- Options for LaTeX and manual page output --------------------------------

latex_documents = [
    (master_doc, 'gsqgpatch.tex', 'gsqgpatch Documentation', author, 'manual'),
]
man_pages = [
    (master_doc, 'gsqgpatch', 'gsqgpatch Documentation', [author], 1),
]


# -- Extension configuration -------------------------------------------------

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
}
