"""
測試套件 - MD-Word Template Renderer
"""
