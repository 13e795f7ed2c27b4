"""
Grupos fundamentais de superfícies via caminhos computacionais
"""
