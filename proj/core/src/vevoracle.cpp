#include "vertexforge/vevoracle.hpp"

#include "vertexforge/parallel.hpp"

#include <algorithm>

namespace vf {

namespace {

QRational vev_rec(std::vector<EOp> ops) {
    for (std::size_t j = ops.size(); j-- > 1;) {
        const EOp a = ops[j - 1], b = ops[j];
        if (a.c < 0 || b.c >= 0) continue;
        std::vector<EOp> swapped = ops;
        std::swap(swapped[j - 1], swapped[j]);
        QRational res = vev_rec(std::move(swapped));
        if (a.c + b.c == 0 && a.n + b.n == 0) {
            std::vector<EOp> dropped(ops.begin(), ops.begin() + (j - 1));
            dropped.insert(dropped.end(), ops.begin() + j + 1, ops.end());
            res += QRational(Rat(a.c)) * vev_rec(std::move(dropped));
        } else {
            long arg = a.c * b.n - b.c * a.n;
            if (arg != 0) {
                std::vector<EOp> merged(ops.begin(), ops.begin() + (j - 1));
                merged.push_back({a.c + b.c, a.n + b.n});
                merged.insert(merged.end(), ops.begin() + j + 1, ops.end());
                res += QRational(qnum(arg)) * vev_rec(std::move(merged));
            }
        }
        return res;
    }
    // normal ordered: creators only block on the left, annihilators on the right
    if (ops.empty()) return QRational(1);
    if (ops.front().c < 0) return QRational(0);
    const EOp last = ops.back();
    if (last.c > 0) return QRational(0);
    if (last.n == 0) throw DivergentTerm("vacuum expectation hits 1/[0]");
    ops.pop_back();
    return vev_rec(std::move(ops)) * QRational(1, qnum(last.n));
}

} // namespace

QRational vev_e_product(std::vector<EOp> ops) {
    for (const EOp& op : ops)
        if (op.c == 0 && op.n == 0)
            throw std::invalid_argument("the mode (0,0) is not an operator");
    return vev_rec(std::move(ops));
}

namespace {

Rat z_rat(const Partition& p) { return Rat(z_lambda(p)); }

} // namespace

QRational three_point_oracle(const Partition& l1, const Partition& l2, const Partition& l3,
                             int threads) {
    const Partition l3t = conjugate(l3);
    const int w1 = l1.weight(), w2 = l2.weight(), w3 = l3.weight();

    struct Term {
        const Partition *mu, *nu1, *nu3, *nu2;
    };
    std::vector<std::vector<Partition>> by_weight;
    int wmax = std::max({w1, w2, w3});
    for (int w = 0; w <= wmax; ++w) by_weight.push_back(partitions_of(w));

    std::vector<Term> terms;
    for (int m = 0; m <= std::min(w1, w3); ++m) {
        for (const Partition& mu : by_weight[m])
            for (const Partition& nu1 : by_weight[w1 - m])
                for (const Partition& nu3 : by_weight[w3 - m])
                    for (const Partition& nu2 : by_weight[w2])
                        terms.push_back({&mu, &nu1, &nu3, &nu2});
    }

    // the mode operator products act on the middle state by eigenvalues: the
    // zero-charge mode with index i contributes the i-th principal power sum
    QRational sum = chunked_reduce<QRational>(
        terms.size(), threads, QRational(0),
        [&](std::size_t i) {
            const Term& t = terms[i];
            long long chi1 = mn_character(l1, disjoint_union(*t.nu1, *t.mu));
            if (chi1 == 0) return QRational(0);
            long long chi3 = mn_character(l3t, disjoint_union(*t.nu3, *t.mu));
            if (chi3 == 0) return QRational(0);
            long long chi2 = mn_character(l2, *t.nu2);
            if (chi2 == 0) return QRational(0);
            Rat scale(static_cast<long>(chi1));
            scale *= static_cast<long>(chi3);
            scale *= static_cast<long>(chi2);
            if (t.nu1->length() % 2 != 0) scale = -scale;
            scale /= z_rat(*t.mu) * z_rat(*t.nu1) * z_rat(*t.nu2) * z_rat(*t.nu3);
            QRational term(scale);
            for (int k = 0; k < t.nu1->length(); ++k)
                term *= power_sum_principal(-t.nu1->part(k), l2);
            for (int k = 0; k < t.nu3->length(); ++k)
                term *= power_sum_principal(t.nu3->part(k), l2);
            for (int k = 0; k < t.nu2->length(); ++k)
                term /= QRational(qnum(t.nu2->part(k)));
            return term;
        },
        [](QRational a, QRational b) {
            a += b;
            return a;
        });
    long long k3 = kappa(l3);
    if (k3 != 0) sum *= QRational(HalfLaurent::monomial(1, static_cast<long>(k3)));
    return sum;
}

} // namespace vf
