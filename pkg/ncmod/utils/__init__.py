"""
Utility modules for ncmod
"""
