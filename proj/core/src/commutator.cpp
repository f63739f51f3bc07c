#include "commat/commutator.hpp"

#include "json_util.hpp"

namespace commat {

MatrixPair generic_pair(int n, std::uint32_t characteristic) {
    if (n < 2)
        throw error("matrix size must be at least 2, got " + std::to_string(n));
    if (!valid_characteristic(characteristic))
        throw error("characteristic must be 0 or a prime below 2^31, got " +
                    std::to_string(characteristic));
    Ring ring{n, characteristic};
    MatrixPair pair{ring, PolyMatrix(ring, n), PolyMatrix(ring, n)};
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            pair.X.at(i, j) = Poly::variable(ring, xvar(i, j));
            pair.Y.at(i, j) = Poly::variable(ring, yvar(i, j));
        }
    }
    return pair;
}

PolyMatrix commutator(const MatrixPair& pair) {
    const int n = pair.ring.n;
    PolyMatrix c(pair.ring, n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            Poly entry = Poly::zero(pair.ring);
            for (int k = 1; k <= n; ++k)
                entry = entry + pair.X.at(i, k) * pair.Y.at(k, j) - pair.Y.at(i, k) * pair.X.at(k, j);
            c.at(i, j) = std::move(entry);
        }
    }
    return c;
}

std::string ideal_name_string(IdealName name) {
    switch (name) {
        case IdealName::I: return "I";
        case IdealName::J: return "J";
        case IdealName::Full: return "FULL";
    }
    return "?";
}

IdealSpec ideal_spec(const MatrixPair& pair, IdealName name) {
    const int n = pair.ring.n;
    if (n < 2)
        throw error("ideal generators require n >= 2");
    const PolyMatrix c = commutator(pair);
    IdealSpec spec{name, n, pair.ring.characteristic, {}};
    const bool odd = n % 2 == 1;
    const int center = (n + 1) / 2;
    if (name == IdealName::I || name == IdealName::Full) {
        for (int i = 1; i <= n - 1; ++i)
            spec.generators.push_back(c.at(i, i));
    }
    if (name == IdealName::J || name == IdealName::Full) {
        for (int i = 1; i <= n; ++i) {
            if (name == IdealName::Full && odd && i == center)
                continue;  // c_{center,center} already in the diagonal block
            spec.generators.push_back(c.at(i, n + 1 - i));
        }
    }
    return spec;
}

std::string ideal_spec_to_json(const IdealSpec& spec) {
    nlohmann::ordered_json j;
    j["name"] = ideal_name_string(spec.name);
    j["n"] = spec.n;
    j["char"] = spec.characteristic;
    auto gens = nlohmann::ordered_json::array();
    for (const auto& g : spec.generators)
        gens.push_back(detail::poly_json_value(g));
    j["generators"] = std::move(gens);
    return j.dump();
}

DetblockReport detblock_reduction_check(int n) {
    if (n < 3)
        throw error("detblock check requires n >= 3");
    const MatrixPair pair = generic_pair(n, 0);
    const Ring& ring = pair.ring;

    SpecMap map;
    map.zeroed.insert(xvar(1, 1));
    map.zeroed.insert(yvar(1, 1));
    for (int i = 2; i <= n; ++i)
        for (int j = 2; j <= n; ++j) {
            map.zeroed.insert(xvar(i, j));
            map.zeroed.insert(yvar(i, j));
        }

    const PolyMatrix c = commutator(pair);
    DetblockReport report{n, true, {},
                          "section prose would also annihilate x_i1 and y_1i; implemented map keeps the "
                          "first row and first column of both X and Y"};

    Poly sum = Poly::zero(ring);
    for (int i = 2; i <= n; ++i) {
        const Poly det_zi = Poly::variable(ring, xvar(i, 1)) * Poly::variable(ring, yvar(1, i)) -
                            Poly::variable(ring, xvar(1, i)) * Poly::variable(ring, yvar(i, 1));
        const Poly got = c.at(i, i).substituted(map);
        if (!(got == det_zi)) {
            report.ok = false;
            report.failures.push_back("c_" + std::to_string(i) + std::to_string(i) + " != det Z_" +
                                      std::to_string(i));
        }
        sum = sum + det_zi;
    }
    if (!(c.at(1, 1).substituted(map) == sum.negated())) {
        report.ok = false;
        report.failures.push_back("c_11 != -sum of det Z_i");
    }
    return report;
}

std::string detblock_report_to_json(const DetblockReport& report) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    j["ok"] = report.ok;
    j["failures"] = report.failures;
    j["note"] = report.note;
    return j.dump();
}

}  // namespace commat
