"""
Core modules for fps-transcend: series arithmetic, decompositions, growth criteria
"""
