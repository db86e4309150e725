// Verification reports. Checkers compare named matrix identities; a failing
// identity yields a witness (identity name, basis column, both unequal
// columns) that can be replayed in isolation.

#pragma once

#include "matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopflab {

enum class Verdict { pass, fail, unsupported };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::unsupported: return "unsupported";
    }
    return "?";
}

struct Witness {
    std::string identity;   // which named identity failed
    std::size_t column = 0; // basis column where lhs and rhs first differ
    std::string lhs, rhs;   // rendered columns
    std::string note;
};

struct CheckEntry {
    std::string name;
    Verdict verdict = Verdict::pass;
    std::optional<Witness> witness;
    std::string notes;
};

struct Report {
    std::string command;
    std::vector<CheckEntry> entries;

    bool passed() const {
        for (const CheckEntry& e : entries)
            if (e.verdict == Verdict::fail) return false;
        return true;
    }
    Verdict overall() const {
        bool unsupported = false;
        for (const CheckEntry& e : entries) {
            if (e.verdict == Verdict::fail) return Verdict::fail;
            if (e.verdict == Verdict::unsupported) unsupported = true;
        }
        return unsupported ? Verdict::unsupported : Verdict::pass;
    }

    CheckEntry& add(std::string name, bool ok, std::string notes = "") {
        entries.push_back({std::move(name), ok ? Verdict::pass : Verdict::fail, std::nullopt, std::move(notes)});
        return entries.back();
    }
    CheckEntry& add_unsupported(std::string name, std::string notes) {
        entries.push_back({std::move(name), Verdict::unsupported, std::nullopt, std::move(notes)});
        return entries.back();
    }
    void merge(const Report& sub, const std::string& prefix) {
        for (const CheckEntry& e : sub.entries) {
            entries.push_back(e);
            entries.back().name = prefix + e.name;
        }
    }
};

// A named pair of matrices that an axiom system requires to be equal.
template <field_scalar K>
struct IdentityPair {
    std::string name;
    Mat<K> lhs, rhs;
};

template <field_scalar K>
void check_identity(Report& rep, const IdentityPair<K>& id) {
    if (id.lhs.rows() != id.rhs.rows() || id.lhs.cols() != id.rhs.cols()) {
        CheckEntry& e = rep.add(id.name, false);
        e.witness = Witness{id.name, 0, id.lhs.str(), id.rhs.str(), "shape mismatch"};
        return;
    }
    for (std::size_t j = 0; j < id.lhs.cols(); ++j) {
        Mat<K> l = id.lhs.col(j), r = id.rhs.col(j);
        if (l != r) {
            CheckEntry& e = rep.add(id.name, false);
            e.witness = Witness{id.name, j, l.str(), r.str(), ""};
            return;
        }
    }
    rep.add(id.name, true);
}

template <field_scalar K>
void check_identities(Report& rep, const std::vector<IdentityPair<K>>& ids) {
    for (const IdentityPair<K>& id : ids) check_identity(rep, id);
}

// Recompute one identity from a fresh identity table and test whether the
// stored witness still exhibits the failure.
template <field_scalar K>
bool witness_replays(const std::vector<IdentityPair<K>>& ids, const Witness& w) {
    for (const IdentityPair<K>& id : ids) {
        if (id.name != w.identity) continue;
        if (w.column >= id.lhs.cols() || w.column >= id.rhs.cols())
            return w.note == "shape mismatch" &&
                   (id.lhs.rows() != id.rhs.rows() || id.lhs.cols() != id.rhs.cols());
        Mat<K> l = id.lhs.col(w.column), r = id.rhs.col(w.column);
        return l != r && l.str() == w.lhs && r.str() == w.rhs;
    }
    return false;
}

}  // namespace hopflab
