#pragma once

#include <iosfwd>
#include <vector>

#include "scew/sequence.hpp"

namespace scew {

struct MutationParams {
    double theta_s = 0.0;
    double theta_d = 0.0;
    double theta_i = 0.0;
    double rho_i = 0.0;   // geometric insertion-length parameter rho'_i
    double gamma = 0.5;   // strict upper bound on rho_i
    int sigma = 4;

    double theta_T() const { return theta_s + theta_d + theta_i; }

    // throws std::invalid_argument on simplex/range violations;
    // strict additionally enforces theta_T < 0.159
    void validate(bool strict) const;
};

// What the channel did at one generative position of S.
struct EditRecord {
    Index pos = 0;             // absolute 1-based position in S
    std::vector<Letter> ins;   // string inserted immediately left of pos
    bool del = false;
    int sub = -1;              // substituted-to letter, -1 when none applied
};

struct EditScript {
    Index p = 0;        // generative region is S[p+1 .. p+m_prime]
    Index m_prime = 0;
    int sigma = 4;
    std::vector<EditRecord> records;   // one per generative position, in order

    Index total_insertions() const;
    Index total_deletions() const;
};

struct SequencePair {
    Sequence S;
    Sequence S_prime;
    EditScript script;
};

/**
 * Indel+substitution channel over S[p+1 .. p+m_prime].  Per position,
 * independently: insertion w.p. theta_i of a uniform random string with
 * geometric length (placed left of the position), deletion w.p. theta_d,
 * substitution w.p. theta_s to a uniform different letter.  A deletion
 * makes a drawn substitution moot.  Draw order per position is fixed
 * (insertion event, length, letters; deletion event; substitution event,
 * letter) so output is reproducible from the seed alone.
 */
SequencePair mutate(const Sequence& S, Index p, Index m_prime, const MutationParams& params,
                    Rng& rng, bool strict = true);

// Replays a script against S; round-trips with mutate's output.
Sequence apply_script(const Sequence& S, const EditScript& script);

// Line format, one record per generative position:
//   pos  ins:<string|->  del:<0|1>  sub:<letter|->
// preceded by '#' header lines carrying p, m_prime and sigma.
void write_script(std::ostream& os, const EditScript& script);
void write_script_file(const std::string& path, const EditScript& script);
EditScript read_script(std::istream& is);
EditScript read_script_file(const std::string& path);

} // namespace scew
