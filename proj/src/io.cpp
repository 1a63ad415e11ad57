#include "goodfam/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace goodfam {

namespace {

struct Token {
    std::string text;
    int column; // 1-based start position
};

std::vector<Token> tokenize(const std::string &line) {
    std::vector<Token> out;
    size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        if (pos >= line.size()) break;
        size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
        out.push_back({line.substr(start, pos - start), static_cast<int>(start) + 1});
    }
    return out;
}

long long parse_int(const Token &tok, int line, long long lo, long long hi,
                    const char *what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(),
                                     tok.text.data() + tok.text.size(), value);
    if (ec != std::errc() || ptr != tok.text.data() + tok.text.size())
        throw FormatError(line, tok.column,
                          std::string("expected an integer for ") + what);
    if (value < lo || value > hi)
        throw FormatError(line, tok.column,
                          std::string(what) + " out of range: " + tok.text);
    return value;
}

double parse_cost(const Token &tok, int line) {
    try {
        size_t used = 0;
        double value = std::stod(tok.text, &used);
        if (used != tok.text.size()) throw std::invalid_argument("");
        if (value < 0)
            throw FormatError(line, tok.column, "edge cost must be >= 0");
        return value;
    } catch (const FormatError &) {
        throw;
    } catch (const std::exception &) {
        throw FormatError(line, tok.column, "expected a cost: " + tok.text);
    }
}

// match "key=value" and return the value token (column points at the value)
Token keyed(const Token &tok, int line, const std::string &key) {
    std::string prefix = key + "=";
    if (tok.text.rfind(prefix, 0) != 0)
        throw FormatError(line, tok.column, "expected " + prefix + "<value>");
    return {tok.text.substr(prefix.size()),
            tok.column + static_cast<int>(prefix.size())};
}

Variant parse_variant(const Token &tok, int line) {
    if (tok.text == "general") return Variant::general;
    if (tok.text == "ss") return Variant::single_source;
    throw FormatError(line, tok.column,
                      "variant must be 'general' or 'ss', got " + tok.text);
}

void expect_tokens(const std::vector<Token> &toks, int line, size_t count,
                   const char *shape) {
    if (toks.size() != count)
        throw FormatError(line, toks.empty() ? 1 : toks.back().column,
                          std::string("expected ") + shape);
}

// the derivation equations the header must satisfy; general alpha/beta are
// the ceilings of gamma/|A| and gamma/|A|^2, single-source needs exact
// division for beta
void check_thresholds(int line, Variant variant, int q, int gamma, int alpha,
                      int beta) {
    int want_alpha, want_beta;
    if (variant == Variant::general) {
        want_alpha = (gamma + q - 1) / q;
        want_beta = (gamma + q * q - 1) / (q * q);
    } else {
        if (gamma % q != 0)
            throw FormatError(line, 1,
                              "single-source gamma must be a multiple of A");
        want_alpha = gamma;
        want_beta = gamma / q;
    }
    if (alpha != want_alpha || beta != want_beta)
        throw FormatError(line, 1,
                          "alpha/beta inconsistent with gamma, A and variant");
}

} // namespace

void write_family(std::ostream &out, const GoodFamily &fam) {
    const FamilyParams &p = fam.params;
    out << "goodfam v1 " << variant_name(p.variant) << " n=" << p.n
        << " k=" << p.k << " A=" << p.alphabet.size << " gamma=" << p.gamma
        << " alpha=" << p.alpha << " beta=" << p.beta << "\n";
    for (const Label &w : fam.labels) {
        for (size_t j = 0; j < w.size(); ++j) {
            if (j) out << ' ';
            out << static_cast<int>(w[j]);
        }
        out << "\n";
    }
}

GoodFamily read_family(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError(1, 1, "empty family file");
    auto toks = tokenize(line);
    expect_tokens(toks, 1, 9,
                  "goodfam v1 <variant> n= k= A= gamma= alpha= beta=");
    if (toks[0].text != "goodfam")
        throw FormatError(1, toks[0].column, "not a goodfam file");
    if (toks[1].text != "v1")
        throw FormatError(1, toks[1].column, "unsupported version " + toks[1].text);
    FamilyParams p;
    p.variant = parse_variant(toks[2], 1);
    p.n = static_cast<int>(parse_int(keyed(toks[3], 1, "n"), 1, 1, 1 << 20, "n"));
    p.k = static_cast<int>(parse_int(keyed(toks[4], 1, "k"), 1, 1, 1 << 20, "k"));
    p.alphabet.size =
        static_cast<int>(parse_int(keyed(toks[5], 1, "A"), 1, 2, 256, "A"));
    p.gamma = static_cast<int>(
        parse_int(keyed(toks[6], 1, "gamma"), 1, 1, 1 << 24, "gamma"));
    p.alpha = static_cast<int>(
        parse_int(keyed(toks[7], 1, "alpha"), 1, 0, 1 << 24, "alpha"));
    p.beta = static_cast<int>(
        parse_int(keyed(toks[8], 1, "beta"), 1, 0, 1 << 24, "beta"));
    check_thresholds(1, p.variant, p.alphabet.size, p.gamma, p.alpha, p.beta);

    GoodFamily fam;
    fam.params = p;
    for (int i = 0; i < p.n; ++i) {
        int lineno = i + 2;
        if (!std::getline(in, line))
            throw FormatError(lineno, 1,
                              "expected " + std::to_string(p.n) +
                                  " label lines, file ends after " +
                                  std::to_string(i));
        auto chars = tokenize(line);
        if (static_cast<int>(chars.size()) != p.gamma)
            throw FormatError(lineno, chars.empty() ? 1 : chars.back().column,
                              "label needs gamma=" + std::to_string(p.gamma) +
                                  " characters, got " +
                                  std::to_string(chars.size()));
        Label w(p.gamma);
        for (int j = 0; j < p.gamma; ++j)
            w[j] = static_cast<uint8_t>(parse_int(chars[j], lineno, 0,
                                                  p.alphabet.size - 1,
                                                  "label character"));
        fam.labels.push_back(std::move(w));
    }
    if (std::getline(in, line) && !tokenize(line).empty())
        throw FormatError(p.n + 2, 1, "trailing content after the last label");
    return fam;
}

void write_instance(std::ostream &out, const SndpInstance &inst) {
    out << "sndp v1 " << variant_name(inst.variant) << " nv=" << inst.vertex_count
        << " k=" << inst.k << "\n";
    for (int t : inst.terminals) out << "t " << t << "\n";
    if (inst.variant == Variant::single_source) out << "s " << inst.source << "\n";
    for (const SndpEdge &e : inst.edges)
        out << "e " << e.u << " " << e.v << " " << e.cost << "\n";
    for (const Requirement &r : inst.requirements) {
        if (inst.variant == Variant::single_source)
            out << "r " << r.v << " " << r.r << "\n";
        else
            out << "r " << r.u << " " << r.v << " " << r.r << "\n";
    }
}

SndpInstance read_instance(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError(1, 1, "empty instance file");
    auto toks = tokenize(line);
    expect_tokens(toks, 1, 5, "sndp v1 <variant> nv= k=");
    if (toks[0].text != "sndp")
        throw FormatError(1, toks[0].column, "not an sndp file");
    if (toks[1].text != "v1")
        throw FormatError(1, toks[1].column, "unsupported version " + toks[1].text);
    SndpInstance inst;
    inst.variant = parse_variant(toks[2], 1);
    inst.vertex_count = static_cast<int>(
        parse_int(keyed(toks[3], 1, "nv"), 1, 1, 1 << 20, "nv"));
    inst.k = static_cast<int>(parse_int(keyed(toks[4], 1, "k"), 1, 1, 1 << 20, "k"));

    bool ss = inst.variant == Variant::single_source;
    int vmax = inst.vertex_count - 1;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        auto t = tokenize(line);
        if (t.empty()) continue;
        const std::string &tag = t[0].text;
        if (tag == "t") {
            expect_tokens(t, lineno, 2, "t <vertex>");
            inst.terminals.push_back(
                static_cast<int>(parse_int(t[1], lineno, 0, vmax, "terminal")));
        } else if (tag == "s") {
            expect_tokens(t, lineno, 2, "s <vertex>");
            if (!ss)
                throw FormatError(lineno, t[0].column,
                                  "source line in a general instance");
            if (inst.source >= 0)
                throw FormatError(lineno, t[0].column, "duplicate source line");
            inst.source =
                static_cast<int>(parse_int(t[1], lineno, 0, vmax, "source"));
        } else if (tag == "e") {
            expect_tokens(t, lineno, 4, "e <u> <v> <cost>");
            SndpEdge e;
            e.u = static_cast<int>(parse_int(t[1], lineno, 0, vmax, "endpoint"));
            e.v = static_cast<int>(parse_int(t[2], lineno, 0, vmax, "endpoint"));
            e.cost = parse_cost(t[3], lineno);
            inst.edges.push_back(e);
        } else if (tag == "r") {
            Requirement r;
            if (ss) {
                expect_tokens(t, lineno, 3, "r <terminal> <req>");
                r.u = -1; // source filled in after the s line is known
                r.v = static_cast<int>(parse_int(t[1], lineno, 0, vmax, "terminal"));
                r.r = static_cast<int>(
                    parse_int(t[2], lineno, 1, inst.k, "requirement"));
            } else {
                expect_tokens(t, lineno, 4, "r <u> <v> <req>");
                r.u = static_cast<int>(parse_int(t[1], lineno, 0, vmax, "terminal"));
                r.v = static_cast<int>(parse_int(t[2], lineno, 0, vmax, "terminal"));
                r.r = static_cast<int>(
                    parse_int(t[3], lineno, 1, inst.k, "requirement"));
            }
            inst.requirements.push_back(r);
        } else {
            throw FormatError(lineno, t[0].column, "unknown line tag " + tag);
        }
    }
    if (ss) {
        if (inst.source < 0)
            throw FormatError(lineno + 1, 1,
                              "single-source instance is missing its s line");
        for (Requirement &r : inst.requirements) r.u = inst.source;
    }
    try {
        validate_instance(inst);
    } catch (const std::invalid_argument &e) {
        throw FormatError(lineno + 1, 1, e.what());
    }
    return inst;
}

namespace {

template <typename Fn> auto with_input_file(const std::string &path, Fn fn) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path + " for reading");
    try {
        return fn(in);
    } catch (const FormatError &e) {
        throw FormatError(e.line, e.column, path + ": " + e.detail);
    }
}

} // namespace

void write_family_file(const std::string &path, const GoodFamily &fam) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_family(out, fam);
}

GoodFamily read_family_file(const std::string &path) {
    return with_input_file(path, [](std::istream &in) { return read_family(in); });
}

void write_instance_file(const std::string &path, const SndpInstance &inst) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_instance(out, inst);
}

SndpInstance read_instance_file(const std::string &path) {
    return with_input_file(path,
                           [](std::istream &in) { return read_instance(in); });
}

} // namespace goodfam
