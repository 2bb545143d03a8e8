"""Numerical toy model of soliton-pair nucleation feeding chaotic inflation.

Subpackages: potentials (regime schedule), vacua (true/false minima and
gap), solitons (kink/antikink profiles and energies), nucleation
(thin-wall and uncertainty scales), inflation (EOM integration), qcdball
(dark-matter ball stability), baryogenesis (asymmetry window), cli.
"""

__version__ = "0.1.0"
