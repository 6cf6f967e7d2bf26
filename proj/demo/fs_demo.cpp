// Library walkthrough: decide connectedness, extract a certificate, and
// cross-check against the explicit FS oracle.
#include <iostream>

#include "fsg/fsg.hpp"
#include "fsg/serialize.hpp"

int main() {
    using namespace fsg;

    // Y = K3 u P2 on five vertices; clique part k = 5 (so X is Complete_5)
    const Graph y = disjoint_union(make_complete(3), make_path(2));
    const int k = 5;

    std::cout << "Y = " << write_graph6(y) << ", k = " << k << "\n";
    std::cout << "every " << k << "-subset connected: " << decide_lollipop_fs_connected(y, k) << "\n";

    const auto witness = find_disconnected_k_subset(y, k);
    std::cout << "witness: " << to_json(*witness).dump() << "\n";

    const CertificatePair cert = build_certificate(y, k, *witness);
    std::cout << "certificate: " << to_json(cert).dump() << "\n";

    const Graph x = make_lollipop(y.order() - k, k);
    const FsComponents comps = fs_components(x, y);
    std::cout << "FS(" << write_graph6(x) << ", " << write_graph6(y) << ") components: "
              << comps.component_count() << "\n";
    std::cout << "certificate pair in different components: "
              << !comps.same_component(cert.special, cert.nonspecial) << "\n";

    // a short swap plan on a connected instance
    const auto moves = fs_reach(make_lollipop(1, 3), make_complete(4),
                                Bijection::identity(4), Bijection::from_values({3, 2, 1, 0}));
    std::cout << "reach plan (" << moves->size() << " swaps): " << to_json(*moves).dump() << "\n";
    return 0;
}
