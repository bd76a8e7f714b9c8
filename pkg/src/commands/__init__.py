"""
Command families for fps-transcend
"""
