"""Plot layouts for the eight series figures.

Each entry names the CSV inputs it expects (in order) and the PlotSpec
dictionary that references them by index. Profile values are stored as
S(x); the figures show -S(x), hence ``scale: -1``.
"""
from __future__ import annotations

from .plotting import PlotSpec


def _c(name, x, y, input=0, scale=1.0, style="solid", marker="none"):
    return {"name": name, "x": x, "y": y, "input": input, "scale": scale,
            "style": style, "marker": marker}


_STYLES = ("solid", "dash", "dot")

FIGURES: dict[str, dict] = {
    "fig1": {
        "inputs": ["sweep_singlet.csv", "sweep_triplet.csv"],
        "spec": {
            "title": "Mutual information, singlet series (inset: triplet)",
            "x_label": "Z", "y_label": "nats",
            "curves": [_c("I_r", "z", "i_r", 0, marker="diamond"),
                       _c("I_p", "z", "i_p", 0, marker="triangle")],
            "inset": {"region": [0.42, 0.08, 0.5, 0.42], "x_label": "Z",
                      "curves": [_c("I_r", "z", "i_r", 1, marker="diamond"),
                                 _c("I_p", "z", "i_p", 1, marker="triangle")]},
        },
    },
    "fig2": {
        "inputs": ["sweep_triplet.csv"],
        "spec": {
            "title": "Reference-subtracted mutual information, triplet series",
            "x_label": "Z", "y_label": "nats",
            "curves": [_c("I_r'", "z", "i_r_prime", marker="diamond"),
                       _c("I_p'", "z", "i_p_prime", marker="triangle")],
        },
    },
    "fig3": {
        "inputs": ["profile_hydrogenic_z1_entropy-density-r.csv",
                   "profile_hydrogenic_z2_entropy-density-r.csv",
                   "profile_hydrogenic_z3_entropy-density-r.csv",
                   "sweep_hydrogenic.csv"],
        "spec": {
            "title": "-S_rho(r), hydrogenic Z = 1, 2, 3 (inset: S_rho, S_pi)",
            "x_label": "r (bohr)", "y_label": "-S_rho(r)",
            "curves": [_c(f"Z={z}", "r", "entropy_density_r", i, -1.0, _STYLES[i])
                       for i, z in enumerate((1, 2, 3))],
            "inset": {"region": [0.45, 0.45, 0.48, 0.42], "x_label": "Z",
                      "curves": [_c("S_rho", "z", "s_rho_u", 3, marker="triangle"),
                                 _c("S_pi", "z", "s_pi_u", 3, marker="triangle")]},
        },
    },
    "fig4": {
        "inputs": ["sweep_triplet.csv", "sweep_singlet.csv"],
        "spec": {
            "title": "One-electron entropies, triplet series (inset: singlet)",
            "x_label": "Z", "y_label": "nats",
            "curves": [_c("S_rho^u", "z", "s_rho_u", 0, marker="diamond"),
                       _c("S_pi^u", "z", "s_pi_u", 0, marker="triangle")],
            "inset": {"region": [0.45, 0.5, 0.48, 0.4], "x_label": "Z",
                      "curves": [_c("S_rho^u", "z", "s_rho_u", 1, marker="diamond"),
                                 _c("S_pi^u", "z", "s_pi_u", 1, marker="triangle")]},
        },
    },
    "fig5": {
        "inputs": ["sweep_triplet.csv", "sweep_singlet.csv"],
        "spec": {
            "title": "Two-electron entropies, triplet series (inset: singlet)",
            "x_label": "Z", "y_label": "nats",
            "curves": [_c("S_Gamma^u", "z", "s_gamma_u", 0, marker="diamond"),
                       _c("S_Pi^u", "z", "s_pi2_u", 0, marker="triangle")],
            "inset": {"region": [0.45, 0.5, 0.48, 0.4], "x_label": "Z",
                      "curves": [_c("S_Gamma^u", "z", "s_gamma_u", 1, marker="diamond"),
                                 _c("S_Pi^u", "z", "s_pi2_u", 1, marker="triangle")]},
        },
    },
    "fig6": {
        "inputs": [f"profile_triplet_z{z}_entropy-density-r.csv" for z in (2, 3, 4)],
        "spec": {
            "title": "-S^u_rho(r), triplet Z = 2, 3, 4",
            "x_label": "r (bohr)", "y_label": "-S^u_rho(r)",
            "curves": [_c(f"Z={z}", "r", "entropy_density_r", i, -1.0, _STYLES[i])
                       for i, z in enumerate((2, 3, 4))],
        },
    },
    "fig7": {
        "inputs": [f"profile_triplet_z{z}_entropy-density-p.csv" for z in (2, 3, 4)],
        "spec": {
            "title": "-S^u_pi(p), triplet Z = 2, 3, 4",
            "x_label": "p (1/bohr)", "y_label": "-S^u_pi(p)",
            "curves": [_c(f"Z={z}", "p", "entropy_density_p", i, -1.0, _STYLES[i])
                       for i, z in enumerate((2, 3, 4))],
        },
    },
    "fig8": {
        "inputs": [f"profile_triplet_z{z}_info-density-p.csv" for z in (2, 3, 4)],
        "spec": {
            "title": "I_p(p), triplet Z = 2, 3, 4",
            "x_label": "p (1/bohr)", "y_label": "I_p(p)",
            "curves": [_c(f"Z={z}", "p", "info_density_p", i, 1.0, _STYLES[i])
                       for i, z in enumerate((2, 3, 4))],
        },
    },
}


def figure_spec(name: str) -> PlotSpec:
    return PlotSpec.from_dict(FIGURES[name]["spec"])
