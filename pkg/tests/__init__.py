"""
测试模块
包含所有测试文件
"""
