"""
Helper scripts for ncmod
"""
