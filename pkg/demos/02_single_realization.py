"""One seeded realization of the learning loop, step by step.

Shows the raw reward/punishment dynamics: the exploration parameter w
shrinks on every outcome 0 and jumps back up on punishments, while the
accumulated unitary drifts toward a stationary state of the channel.
"""

from qrl import AlgorithmParams, Channel, run_realization

channel = Channel(kind="adn", tau=1.0, t_dec=1.0)
params = AlgorithmParams(iterations=300)
records = run_realization(channel, params, seed=2024)

punishments = sum(r.outcome for r in records)
print(f"amplitude damping, tau=1, t_dec=1, seed 2024: "
      f"{len(records)} iterations, {punishments} punishments")
print(f"{'k':>4s} {'m':>2s} {'w':>10s} {'P(0)':>8s} {'f_e':>7s} {'f_g':>7s}")
for record in records:
    if record.k <= 10 or record.k % 25 == 0:
        print(f"{record.k:4d} {record.outcome:2d} {record.w:10.3e} "
              f"{record.p_zero:8.4f} {record.f_e:7.4f} {record.f_g:7.4f}")

final = records[-1]
target = "ground" if final.f_g > final.f_e else "excited"
print(f"\nconverged toward the {target} state: "
      f"f_e = {final.f_e:.4f}, f_g = {final.f_g:.4f}, w = {final.w:.2e}")
print("(amplitude damping makes the ground state the only attractor;")
print(" rerun with kind='pdn' and either eigenstate can win)")
