"""Plugins for cddsim CLI commands.

Default Plugins:

* sequence: compile a CDD / PDD schedule.
* fit: fit an exponential decay to a CSV curve.
* theory: evaluate the analytic bounds.
* simulate: run a decay-curve experiment from a configuration file.
* sweep: decay rates across a pulse-interval grid.
"""
