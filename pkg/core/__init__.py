"""Integer simplex T_m^n: vertices, adjacency, container routing, embeddings and export."""
