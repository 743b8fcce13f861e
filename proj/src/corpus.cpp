#include <parcelforge/corpus.hpp>

namespace parcelforge {

namespace {

OrientedGraph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    OrientedGraph g;
    g.vertex_count = n;
    g.edges = std::move(edges);
    return g;
}

std::vector<Instance> build() {
    std::vector<Instance> out;

    const OrientedGraph single = make_graph(2, {{0, 1}});
    const OrientedGraph loop = make_graph(1, {{0, 0}});
    const OrientedGraph triangle = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    const OrientedGraph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const OrientedGraph c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    const OrientedGraph k4 =
        make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const OrientedGraph k23 =
        make_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    const OrientedGraph bowtie =
        make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    // two triangles joined by a bridge edge
    const OrientedGraph bridge = make_graph(
        6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
    const OrientedGraph path3 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});

    out.push_back(make_graph_instance("single-edge", single, true));
    out.push_back(make_graph_instance("loop", loop, true));
    out.push_back(make_graph_instance("triangle-cycle", triangle, true));
    out.push_back(make_graph_instance("triangle-vertex", triangle, false));
    out.push_back(make_graph_instance("c4", c4, true));
    out.push_back(make_graph_instance("c5", c5, true));
    out.push_back(make_graph_instance("k4-cycle", k4, true));
    out.push_back(make_graph_instance("k4-vertex", k4, false));
    out.push_back(make_graph_instance("k23", k23, true));
    out.push_back(make_graph_instance("bowtie", bowtie, true));
    out.push_back(make_graph_instance("bridge", bridge, true));
    out.push_back(make_graph_instance("path3", path3, true));

    out.push_back(make_gfp_instance("fano-gf2", 2,
                                    {{1, 0, 0, 1, 1, 0, 1},
                                     {0, 1, 0, 1, 0, 1, 1},
                                     {0, 0, 1, 0, 1, 1, 1}}));
    out.push_back(make_gfp_instance("hamming74-gf2", 2,
                                    {{1, 0, 0, 0, 1, 1, 0},
                                     {0, 1, 0, 0, 1, 0, 1},
                                     {0, 0, 1, 0, 0, 1, 1},
                                     {0, 0, 0, 1, 1, 1, 1}}));
    out.push_back(make_gfp_instance("ternary-2x4", 3, {{1, 0, 1, 1}, {0, 1, 1, 2}}));
    out.push_back(make_gfp_instance("ternary-whirl", 3,
                                    {{1, 0, 0, 1, 1},
                                     {0, 1, 0, 1, 1},
                                     {0, 0, 1, 0, 2}}));
    out.push_back(make_gfp_instance("id3-gf3", 3,
                                    {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    out.push_back(make_gfp_instance("id2-gf5", 5, {{1, 0}, {0, 1}}));
    return out;
}

} // namespace

std::vector<Instance> corpus() {
    static const std::vector<Instance> instances = build();
    return instances;
}

Instance corpus_instance(const std::string& name) {
    for (const auto& inst : corpus())
        if (inst.name == name) return inst;
    throw ParseError("unknown builtin instance \"" + name + "\"");
}

} // namespace parcelforge
