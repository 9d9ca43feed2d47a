# physics/flux.py

"""
Fluxo numérico de Lax-Friedrichs e limite global de velocidade de onda.
"""

# --- Imports de Terceiros ---
import numpy as np

# --- Imports Locais da Aplicação ---
from components.errors import ConfigurationError


def lax_friedrichs(u_minus, u_plus, flux, alpha):
    """
    f_hat = (f(u-) + f(u+))/2 - alpha/2 (u+ - u-).

    `flux` é qualquer função estado -> fluxo (por exemplo `model.flux_x`).
    Os estados podem ser escalares ou arrays com as variáveis no eixo 0.
    """
    u_minus = np.asarray(u_minus, dtype=float)
    u_plus = np.asarray(u_plus, dtype=float)
    return 0.5 * (flux(u_minus) + flux(u_plus)) - 0.5 * alpha * (u_plus - u_minus)


def wavespeed_bound(states, model, axis=0):
    """
    alpha = max |f'(u)| sobre um conjunto de estados.

    Aceita um array `(n_vars, ...)` ou uma sequência de estados `(n_vars,)`.

    :raises ConfigurationError: se o conjunto estiver vazio.
    """
    if isinstance(states, (list, tuple)):
        if len(states) == 0:
            raise ConfigurationError("Conjunto de estados vazio para a velocidade de onda")
        states = np.stack([np.atleast_1d(np.asarray(s, dtype=float)) for s in states], axis=-1)
    states = np.asarray(states, dtype=float)
    if states.size == 0:
        raise ConfigurationError("Conjunto de estados vazio para a velocidade de onda")
    if states.ndim == 1 and model.n_vars == 1:
        states = states[np.newaxis]
    return float(np.max(model.spectral_radius(states, axis)))
