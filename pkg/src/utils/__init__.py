"""
Utility modules for fps-transcend
"""
