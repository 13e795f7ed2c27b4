"""
Sistema de reescrita LND_EQ-TRS: padrões, contextos, regras e motor de normalização
"""
