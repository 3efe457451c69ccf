"""
Paquete de configuración del sistema de verificación.
"""
from .config import *
