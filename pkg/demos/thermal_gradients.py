"""Two-bath diamond: self-organized gradients vs active thermalization.

Before the drive switches on, the system is a passive heat bridge:
J_L = -J_R with heat entering from the hotter side. Once driven from the
ground state (seek mode) it dumps most of its intake into the left bath
regardless of which side is hotter, so a left-hot gradient would keep
growing. Driven on the upper gap (avoid mode) it instead dissipates
preferentially into the colder bath, opposing whatever gradient exists.
"""

from fewlevel import RunProtocol, diamond_preset, evolve

for mode in ("seek", "avoid"):
    print(f"=== {mode} mode (drive {'g-a' if mode == 'seek' else 'a-e'}, "
          f"omega = 0.5)")
    for t_left, t_right in ((0.2, 0.4), (0.4, 0.2)):
        spec = diamond_preset(mode, 0.5, t_left, t_right)
        traj = evolve(spec, RunProtocol(t_max=200.0, sample_interval=0.05,
                                        initial_state="undriven_steady"))
        before = traj.samples[0][2].group_currents
        after = traj.final_energetics.group_currents
        favored = "L" if abs(after["L"]) > abs(after["R"]) else "R"
        print(f"  T_L={t_left}, T_R={t_right}:")
        print(f"    t<0 conduction: J_L = {before['L']:+.5f}, "
              f"J_R = {before['R']:+.5f}")
        print(f"    driven steady : J_L = {after['L']:+.5f}, "
              f"J_R = {after['R']:+.5f}  -> dissipation favors {favored} "
              f"(P = {traj.final_energetics.power_total:.4f})")
    print()
