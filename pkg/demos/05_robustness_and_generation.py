"""Stress the topology-only claim and mass-produce valid networks.

Cluster membership is supposed to depend only on which edges exist and their
signs, never on weight magnitudes or stubbornness levels. The harness
re-draws both, hundreds of times, and checks the partition never moves. The
generator runs the construction in reverse: plant the clusters, then wire a
random network around them that provably satisfies both conditions.
Run as: python demos/05_robustness_and_generation.py
"""

from sfj import (
    analyze,
    networks,
    predict_clusters,
    random_multiconsensus_graph,
    robustness_harness,
    save_graph,
)

report = robustness_harness(networks.g2(), trials=200, seed=42)
print(
    f"{report.passes}/{report.trials} re-draws kept the partition "
    f"{[sorted(c) for c in report.predicted]}"
)
print(f"worst within-cluster row spread: {report.worst_spread:.2e}")

# Now generate fresh networks with prescribed cluster counts and verify each.
for n, z in ((8, 2), (15, 3), (24, 6)):
    g = random_multiconsensus_graph(n, z, seed=n + z)
    cert = analyze(g)
    clusters = predict_clusters(cert).clusters
    trial = robustness_harness(g, trials=50, seed=0)
    print(
        f"\ngenerated n={n} z={z}: persuasive agents {cert.ltp_agents}, "
        f"C1={cert.covered} C2={cert.cooperative}, "
        f"harness {trial.passes}/{trial.trials}"
    )
    print("  clusters:", [sorted(c) for c in clusters])

g = random_multiconsensus_graph(12, 4, seed=7)
save_graph(g, "generated_12x4.json")
print("\nwrote generated_12x4.json; try: sfj analyze generated_12x4.json")
