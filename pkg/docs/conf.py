"""Sphinx configuration."""

project = "cddsim"
author = "cddsim developers"
copyright = "2026, cddsim developers"
extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx.ext.autosectionlabel",
    "sphinx_click",
    "sphinx_copybutton",
    "myst_parser",
]

autodoc_typehints = "description"
autodoc_typehints_format = "short"
autodoc_member_order = "groupwise"
autoclass_content = "both"
autosectionlabel_prefix_document = True

html_theme = "furo"

myst_heading_anchors = 2
myst_enable_extensions = [
    "dollarmath",
    "linkify",
    "replacements",
]

# sphinx-copybutton configurations
copybutton_prompt_text = r">>> |\.\.\. |\$ "
copybutton_prompt_is_regexp = True
