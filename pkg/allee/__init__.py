"""Allee etkili n-yama sistemi: indirgenmiş sistemler, border polinomu, CAD, sayım ve oracle."""
