"""
Termos de caminho computacional: construção, extremos e sintaxe textual
"""
