// A short tour of the library: build the unpierceable family prefix, check
// its (4,3)-property, pierce it exactly, certify that a candidate transversal
// fails against the tail, and run the clip-and-pierce pipeline after adding
// two disjoint compacta.

#include <iostream>

#include "pierce/pierce.hpp"

int main() {
    using namespace pierce;
    const auto cfg = SequenceConfig::defaults();

    Family f = generate(8, cfg);
    std::cout << "family " << f.name << " with " << f.regions.size() << " regions\n";

    const PqReport pq = has_pq_property(f, 4, 3);
    std::cout << "(4,3)-property: " << (pq.holds ? "holds" : "fails") << "\n";

    const PiercingResult pierced = piercing_number(f);
    std::cout << "tau = " << pierced.tau << ", transversal:";
    for (const Point& p : pierced.transversal) std::cout << " " << to_string(p);
    std::cout << "\n";

    // No fixed finite point set survives the tail: some F_n misses all of it.
    const auto cert = unpierceability_certificate(pierced.transversal, cfg);
    std::cout << "but F" << cert.n_star << " of the full family misses every point above\n";

    // With two disjoint compacta in the family, clipping by their joint hull
    // bounds the piercing number by 13.
    f.regions.push_back(box_region("A", 0, 1, Rational(-1, 4), Rational(1, 4)));
    f.regions.push_back(box_region("B", Rational(-1, 4), Rational(1, 4), 7, 8));
    const Theorem2Report rep = run_theorem2(f, "A", "B");
    std::cout << "clipped family: tau = " << rep.piercing->tau << " <= " << rep.bound
              << ", transversal pierces the original: "
              << (rep.pierces_original ? "yes" : "no") << "\n";
    return 0;
}
