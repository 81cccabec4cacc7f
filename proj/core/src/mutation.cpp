#include "scew/mutation.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace scew {

void MutationParams::validate(bool strict) const {
    auto in_unit = [](double v) { return v >= 0.0 && v < 1.0; };
    if (!in_unit(theta_s) || !in_unit(theta_d) || !in_unit(theta_i))
        throw std::invalid_argument("mutation rates must each lie in [0,1)");
    if (theta_T() >= 1.0)
        throw std::invalid_argument("total mutation rate theta_T must be < 1");
    if (strict && theta_T() >= 0.159)
        throw std::invalid_argument("strict mode requires theta_T < 0.159");
    if (!(rho_i >= 0.0 && rho_i < 1.0))
        throw std::invalid_argument("rho_i must lie in [0,1)");
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::invalid_argument("gamma must lie in (0,1)");
    // theory wants rho_i strictly below gamma; experiments may pin them equal
    if (strict ? !(rho_i < gamma) : !(rho_i <= gamma))
        throw std::invalid_argument(strict ? "strict mode requires rho_i < gamma"
                                           : "rho_i must be <= gamma");
    if (sigma < 2)
        throw std::invalid_argument("alphabet size must be >= 2");
}

Index EditScript::total_insertions() const {
    Index total = 0;
    for (const auto& rec : records) total += static_cast<Index>(rec.ins.size());
    return total;
}

Index EditScript::total_deletions() const {
    Index total = 0;
    for (const auto& rec : records) total += rec.del ? 1 : 0;
    return total;
}

SequencePair mutate(const Sequence& S, Index p, Index m_prime, const MutationParams& params,
                    Rng& rng, bool strict) {
    params.validate(strict);
    if (params.sigma != S.sigma())
        throw std::invalid_argument("params.sigma differs from sequence alphabet");
    if (p < 0 || m_prime < 1 || p + m_prime > S.size())
        throw std::invalid_argument("generative region out of bounds");

    EditScript script;
    script.p = p;
    script.m_prime = m_prime;
    script.sigma = params.sigma;
    script.records.resize(static_cast<size_t>(m_prime));

    const uint64_t sig = static_cast<uint64_t>(params.sigma);
    for (Index j = 1; j <= m_prime; ++j) {
        EditRecord& rec = script.records[static_cast<size_t>(j - 1)];
        rec.pos = p + j;
        if (rng.bernoulli(params.theta_i)) {
            int64_t len = rng.geometric_from_one(params.rho_i);
            rec.ins.resize(static_cast<size_t>(len));
            for (auto& c : rec.ins) c = static_cast<Letter>(rng.next_below(sig));
        }
        rec.del = rng.bernoulli(params.theta_d);
        bool sub = rng.bernoulli(params.theta_s);
        if (sub && !rec.del) {
            // uniform over the sigma-1 letters different from the original
            Letter orig = S.at1(rec.pos);
            uint64_t r = rng.next_below(sig - 1);
            rec.sub = static_cast<int>(r + (r >= orig ? 1 : 0));
        }
    }

    SequencePair pair;
    pair.S_prime = apply_script(S, script);
    pair.S = S;
    pair.script = std::move(script);
    return pair;
}

Sequence apply_script(const Sequence& S, const EditScript& script) {
    if (script.p < 0 || script.m_prime < 1 || script.p + script.m_prime > S.size())
        throw std::invalid_argument("script region out of bounds for this sequence");
    if (static_cast<Index>(script.records.size()) != script.m_prime)
        throw std::invalid_argument("script record count does not match m_prime");
    Sequence out({}, script.sigma);
    for (Index j = 1; j <= script.m_prime; ++j) {
        const EditRecord& rec = script.records[static_cast<size_t>(j - 1)];
        if (rec.pos != script.p + j)
            throw std::invalid_argument("script record positions out of order");
        for (Letter c : rec.ins) out.push_back(c);
        if (!rec.del) {
            Letter c = S.at1(rec.pos);
            if (rec.sub >= 0) {
                if (rec.sub == c)
                    throw std::invalid_argument("substituted-to letter equals the original");
                c = static_cast<Letter>(rec.sub);
            }
            out.push_back(c);
        }
    }
    return out;
}

void write_script(std::ostream& os, const EditScript& script) {
    os << "# edit script, positions are 1-based in S; insertions land left of pos\n";
    os << "# p=" << script.p << " m_prime=" << script.m_prime << " sigma=" << script.sigma << "\n";
    static const char kDna[] = "ACGT";
    bool dna = script.sigma == 4;
    for (const auto& rec : script.records) {
        os << rec.pos << "\tins:";
        if (rec.ins.empty()) {
            os << '-';
        } else {
            for (Letter c : rec.ins) {
                if (dna) os << kDna[c]; else os << int(c);
            }
        }
        os << "\tdel:" << (rec.del ? 1 : 0) << "\tsub:";
        if (rec.sub < 0) os << '-';
        else if (dna) os << kDna[rec.sub];
        else os << rec.sub;
        os << '\n';
    }
}

void write_script_file(const std::string& path, const EditScript& script) {
    std::ofstream os(path);
    if (!os) throw std::invalid_argument("cannot open for writing: " + path);
    write_script(os, script);
}

static Letter parse_letter(const std::string& tok, int sigma) {
    if (sigma == 4) {
        Sequence s = from_dna(tok);
        return s.at1(1);
    }
    int v = std::stoi(tok);
    if (v < 0 || v >= sigma) throw std::invalid_argument("letter out of range in script");
    return static_cast<Letter>(v);
}

EditScript read_script(std::istream& is) {
    EditScript script;
    bool header_seen = false;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string tok;
            while (hs >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) continue;
                std::string key = tok.substr(0, eq);
                long long val = std::stoll(tok.substr(eq + 1));
                if (key == "p") { script.p = val; header_seen = true; }
                else if (key == "m_prime") script.m_prime = val;
                else if (key == "sigma") script.sigma = static_cast<int>(val);
            }
            continue;
        }
        std::istringstream ls(line);
        EditRecord rec;
        std::string ins_tok, del_tok, sub_tok;
        if (!(ls >> rec.pos >> ins_tok >> del_tok >> sub_tok))
            throw std::invalid_argument("malformed script line: " + line);
        auto strip = [](std::string& tok, const char* prefix) {
            std::string pre(prefix);
            if (tok.rfind(pre, 0) != 0)
                throw std::invalid_argument("expected '" + pre + "' field in script line");
            tok = tok.substr(pre.size());
        };
        strip(ins_tok, "ins:");
        strip(del_tok, "del:");
        strip(sub_tok, "sub:");
        if (ins_tok != "-") {
            if (script.sigma == 4) {
                const Sequence ins_seq = from_dna(ins_tok);
                for (Letter c : ins_seq.data()) rec.ins.push_back(c);
            } else {
                for (char ch : ins_tok) rec.ins.push_back(parse_letter(std::string(1, ch), script.sigma));
            }
        }
        rec.del = del_tok == "1";
        if (!rec.del && del_tok != "0")
            throw std::invalid_argument("del field must be 0 or 1");
        if (sub_tok != "-") rec.sub = parse_letter(sub_tok, script.sigma);
        script.records.push_back(std::move(rec));
    }
    if (!header_seen && !script.records.empty()) {
        // tolerate headerless scripts: infer p and m_prime from the records
        script.p = script.records.front().pos - 1;
        script.m_prime = static_cast<Index>(script.records.size());
    }
    if (script.m_prime == 0) script.m_prime = static_cast<Index>(script.records.size());
    return script;
}

EditScript read_script_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open script file: " + path);
    return read_script(is);
}

} // namespace scew
