#include "graphon/multipodal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "graphon/kahan.hpp"

namespace graphon {

namespace {

std::string idx2(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

void validate(const MultipodalGraphon& g) {
    const int m = g.pod_count();
    if (m < 1) throw validation_error("graphon must have at least one pod");
    if (g.values.rows() != m || g.values.cols() != m)
        throw validation_error("values must be " + std::to_string(m) + "x" + std::to_string(m) +
                               ", got " + std::to_string(g.values.rows()) + "x" +
                               std::to_string(g.values.cols()));
    KahanSum mass;
    for (int i = 0; i < m; ++i) {
        if (!(g.pods[i] > 0.0))
            throw validation_error("pod mass c[" + std::to_string(i) + "]=" +
                                   std::to_string(g.pods[i]) + " is not strictly positive");
        mass.add(g.pods[i]);
    }
    if (std::abs(mass.value() - 1.0) > 1e-12)
        throw validation_error("pod masses sum to " + std::to_string(mass.value()) +
                               ", expected 1 within 1e-12");
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double v = g.values(i, j);
            if (!std::isfinite(v) || v < 0.0 || v > 1.0)
                throw validation_error("block value p" + idx2(i, j) + "=" + std::to_string(v) +
                                       " outside [0,1]");
            if (g.values(i, j) != g.values(j, i))
                throw validation_error("values not symmetric at " + idx2(i, j));
        }
}

MultipodalGraphon make_graphon(Eigen::VectorXd pods, Eigen::MatrixXd values) {
    MultipodalGraphon g{std::move(pods), std::move(values)};
    validate(g);
    return g;
}

MultipodalGraphon split_pod(const MultipodalGraphon& g, int i) {
    const int m = g.pod_count();
    if (i < 0 || i >= m) throw validation_error("split_pod: index out of range");
    Eigen::VectorXd c(m + 1);
    Eigen::MatrixXd p(m + 1, m + 1);
    // pod i becomes pods i and i+1, each with half the mass and the same rows
    auto src = [&](int k) { return k <= i ? k : k - 1; };
    for (int a = 0; a < m + 1; ++a) {
        c[a] = g.pods[src(a)];
        if (a == i || a == i + 1) c[a] = g.pods[i] / 2.0;
        for (int b = 0; b < m + 1; ++b) p(a, b) = g.values(src(a), src(b));
    }
    return MultipodalGraphon{std::move(c), std::move(p)};
}

MultipodalGraphon embed_in_pods(const MultipodalGraphon& g, int m) {
    if (m < g.pod_count()) throw validation_error("embed_in_pods: target fewer pods than source");
    MultipodalGraphon out = g;
    while (out.pod_count() < m) {
        int heaviest = 0;
        for (int i = 1; i < out.pod_count(); ++i)
            if (out.pods[i] > out.pods[heaviest]) heaviest = i;
        out = split_pod(out, heaviest);
    }
    return out;
}

MultipodalGraphon permute_pods(const MultipodalGraphon& g, const std::vector<int>& perm) {
    const int m = g.pod_count();
    if (static_cast<int>(perm.size()) != m) throw validation_error("permute_pods: size mismatch");
    Eigen::VectorXd c(m);
    Eigen::MatrixXd p(m, m);
    for (int a = 0; a < m; ++a) {
        c[a] = g.pods[perm[a]];
        for (int b = 0; b < m; ++b) p(a, b) = g.values(perm[a], perm[b]);
    }
    return MultipodalGraphon{std::move(c), std::move(p)};
}

MultipodalGraphon compact_pods(const MultipodalGraphon& g, double tol) {
    const int m = g.pod_count();
    std::vector<int> cluster(m, -1);
    std::vector<int> reps;
    for (int i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < reps.size(); ++k) {
            int r = reps[k];
            bool same = true;
            for (int j = 0; j < m && same; ++j)
                if (std::abs(g.values(i, j) - g.values(r, j)) > tol) same = false;
            // rows i and r must also agree where they cross each other
            if (same && std::abs(g.values(i, i) - g.values(r, r)) > tol) same = false;
            if (same) {
                cluster[i] = static_cast<int>(k);
                break;
            }
        }
        if (cluster[i] < 0) {
            cluster[i] = static_cast<int>(reps.size());
            reps.push_back(i);
        }
    }
    const int k = static_cast<int>(reps.size());
    if (k == m) return g;
    Eigen::VectorXd c = Eigen::VectorXd::Zero(k);
    for (int i = 0; i < m; ++i) c[cluster[i]] += g.pods[i];
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(k, k);
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double wij = g.pods[i] * g.pods[j];
            p(cluster[i], cluster[j]) += wij * g.values(i, j);
            w(cluster[i], cluster[j]) += wij;
        }
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) p(a, b) /= w(a, b);
    // exact symmetry after the weighted averaging
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            double v = 0.5 * (p(a, b) + p(b, a));
            p(a, b) = p(b, a) = v;
        }
    return MultipodalGraphon{std::move(c), std::move(p)};
}

MultipodalGraphon canonicalize(const MultipodalGraphon& g) {
    const int m = g.pod_count();
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.values(a, a) != g.values(b, b)) return g.values(a, a) < g.values(b, b);
        if (g.pods[a] != g.pods[b]) return g.pods[a] < g.pods[b];
        for (int j = 0; j < m; ++j)
            if (g.values(a, j) != g.values(b, j)) return g.values(a, j) < g.values(b, j);
        return a < b;
    });
    return permute_pods(g, order);
}

double l2_distance(const MultipodalGraphon& a, const MultipodalGraphon& b) {
    validate(a);
    validate(b);
    // merge the two cumulative-mass breakpoint sets
    std::vector<double> cuts;
    double acc = 0.0;
    for (int i = 0; i + 1 < a.pod_count(); ++i) cuts.push_back(acc += a.pods[i]);
    acc = 0.0;
    for (int i = 0; i + 1 < b.pod_count(); ++i) cuts.push_back(acc += b.pods[i]);
    cuts.push_back(0.0);
    cuts.push_back(1.0);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](double x, double y) { return std::abs(x - y) < 1e-15; }),
               cuts.end());

    const int n = static_cast<int>(cuts.size()) - 1;
    std::vector<double> w(n);
    std::vector<int> ia(n), ib(n);
    auto locate = [](const MultipodalGraphon& g, double x) {
        double cum = 0.0;
        for (int i = 0; i < g.pod_count(); ++i) {
            cum += g.pods[i];
            if (x < cum) return i;
        }
        return g.pod_count() - 1;
    };
    for (int k = 0; k < n; ++k) {
        w[k] = cuts[k + 1] - cuts[k];
        double mid = 0.5 * (cuts[k] + cuts[k + 1]);
        ia[k] = locate(a, mid);
        ib[k] = locate(b, mid);
    }
    KahanSum s;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            double d = a.values(ia[x], ia[y]) - b.values(ib[x], ib[y]);
            s.add(w[x] * w[y] * d * d);
        }
    return std::sqrt(std::max(0.0, s.value()));
}

}  // namespace graphon
