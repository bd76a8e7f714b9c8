"""
Data files for fps-transcend: command routes and summary templates
"""
