#pragma once

#include <map>
#include <vector>

#include "dtv/partition.hpp"
#include "dtv/qseries.hpp"

namespace dtv {

enum class OpKind {
    GammaPlus,
    GammaMinus,
    GammaPlusPrime,
    GammaMinusPrime,
    EPlus,
    EMinus,
    WeightSingle,
    WeightPair,
    WeightZn,
};

struct Operator {
    OpKind kind;
    Term arg;   // x for Gamma; x^2 for E (so square roots never appear)
    int g = 0;  // variable slot of a weight operator
    int h = 0;  // second slot of a pair weight

    static Operator gamma(int tau, bool primed, const Term& x = Term::one());
    static Operator e_plus(const Term& x) { return {OpKind::EPlus, x * x}; }
    static Operator e_minus(const Term& x) { return {OpKind::EMinus, x * x}; }
    static Operator e_plus_sq(const Term& y) { return {OpKind::EPlus, y}; }
    static Operator e_minus_sq(const Term& y) { return {OpKind::EMinus, y}; }
    static Operator weight(int g) { return {OpKind::WeightSingle, Term::one(), g}; }
    static Operator weight_pair(int h1, int h2) { return {OpKind::WeightPair, Term::one(), h1, h2}; }
    static Operator weight_zn(int g) { return {OpKind::WeightZn, Term::one(), g}; }

    bool is_weight() const;
    bool creates() const;  // raises partition size
};

struct TransferState {
    int nvars = 4;
    int cutoff = 0;
    std::map<Partition, Series> amp;

    TransferState(int nvars, int cutoff) : nvars(nvars), cutoff(cutoff) {}
    static TransferState basis(int nvars, int cutoff, const Partition& p);
    void add(const Partition& p, const Series& s);
    void drop_zeros();
    bool operator==(const TransferState& o) const;
};

struct ApplyOptions {
    // drop partitions larger than this (needed when a creation operator has a
    // degree-zero argument and no weight follows)
    int max_size = -1;
    // every box of the result gets weighted at least once more: enforce
    // degree + |partition| <= cutoff
    bool prune = false;
};

TransferState apply(const Operator& op, const TransferState& s, const ApplyOptions& opt = {});
// alpha_{-n} (add) or alpha_n (remove) on a single partition: (result, sign)
std::vector<std::pair<Partition, int>> border_strips(const Partition& p, int n, bool add);
TransferState border_strip_apply(bool add, int n, const TransferState& s, int max_size = -1);

// <0| ops |0>, operators written left to right
Series evaluate_product(const std::vector<Operator>& ops, int nvars, int cutoff);

enum class Group { z2z2, zn };
enum class TransferMode { standard, rpc_antidiag, rpc_diag };

struct VertexRequest {
    Group group = Group::z2z2;
    int n = 4;  // Zn only
    Partition nu;
    TransferMode mode = TransferMode::standard;
    int cutoff = 6;
};

// operator sequence on the window [-window, window]
std::vector<Operator> vertex_operators(const VertexRequest& r, int window);
int default_window(const VertexRequest& r);
Series vertex_by_transfer(const VertexRequest& r);

// Weight operator selectors.
Operator q_tilde(int k, const Partition& nu);
Operator q_bar(int k, const Partition& nu);
Operator q_hat(int k);

}  // namespace dtv
