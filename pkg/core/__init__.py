"""
ToT-Privacy - paquete principal
"""
