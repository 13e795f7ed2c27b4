"""
λ-cálculo não tipado e caminhos computacionais de redução
"""
