"""
Tests for fps-transcend
"""
