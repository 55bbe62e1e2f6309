#include "qbill/cli.hpp"

#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "qbill/serialize.hpp"

namespace qbill::cli {

namespace {

TableKind table_or_throw(const std::string& s) {
    auto t = parse_table(s);
    if (!t) throw std::invalid_argument("unknown table '" + s + "'");
    return *t;
}

std::string cycles_text(const CycleStructure& s) {
    std::ostringstream o;
    o << s.params.n << " = " << s.params.b << "*" << s.params.q << "+" << s.params.r << "\n";
    for (const Cycle& c : s.cycles) {
        o << "C_" << c.min << " = (";
        for (size_t k = 0; k < c.elements.size(); ++k) o << (k ? "," : "") << c.elements[k];
        o << ")\n";
    }
    return o.str();
}

std::string full_blocks(const Word& full, const CycleStructure& s) {
    // Each reduced block of length L covers 2L full digits.
    std::string out;
    const auto lens = lengths(s);
    size_t pos = 0, idx = 0;
    while (pos < full.digits.size()) {
        const size_t len = 2 * static_cast<size_t>(lens[idx % lens.size()]);
        for (size_t k = 0; k < len && pos < full.digits.size(); ++k, ++pos)
            out.push_back(static_cast<char>('0' + full.digits[pos]));
        if (pos < full.digits.size()) out.push_back(' ');
        ++idx;
    }
    return out;
}

RationalPoint parse_point(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("point must be u,v");
    return {parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1))};
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"q-cycle billiard words"};
    app.require_subcommand(1);

    int n = 0, q = 0, steps = 0, max_n = 40;
    bool json_out = false, reduced = false, blocks = false;
    std::string table_s, rule_s, word_s, p0_s;

    auto* cycles = app.add_subcommand("cycles", "ordered q-cycle decomposition");
    cycles->add_option("n", n)->required();
    cycles->add_option("q", q)->required();
    cycles->add_flag("--json", json_out);

    auto* word = app.add_subcommand("word", "billiard word of a direction");
    word->add_option("--table", table_s)->required();
    word->add_option("n", n)->required();
    word->add_option("q", q)->required();
    word->add_flag("--reduced", reduced);
    word->add_flag("--blocks", blocks);
    word->add_flag("--json", json_out);

    auto* verify = app.add_subcommand("verify", "recognize a periodic word");
    auto* vt = verify->add_option("--table", table_s);
    auto* vr = verify->add_option("--rule", rule_s);
    vt->excludes(vr);
    verify->add_option("word", word_s);
    verify->add_flag("--json", json_out);

    auto* sim = app.add_subcommand("simulate", "exact ray tracing in the unfolded tiling");
    sim->add_option("--table", table_s)->required();
    sim->add_option("--n", n)->required();
    sim->add_option("--q", q)->required();
    sim->add_option("--p0", p0_s);
    sim->add_option("--steps", steps);
    sim->add_flag("--json", json_out);

    auto* cls = app.add_subcommand("class", "translation class of a direction");
    cls->add_option("--n", n)->required();
    cls->add_option("--q", q)->required();
    cls->add_option("--rule", rule_s)->required();
    cls->add_flag("--json", json_out);

    auto* self = app.add_subcommand("selftest", "run the invariant sweeps");
    self->add_option("--max-n", max_n);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*cycles) {
            const CycleStructure s = decompose(n, q);
            if (json_out) out << to_json(s).dump() << "\n";
            else out << cycles_text(s);
            return 0;
        }
        if (*word) {
            const TableKind kind = table_or_throw(table_s);
            const CycleStructure s = decompose(n, q);
            const Word w = reduced ? reduced_word(s, rule_for(kind)) : word_of_direction(kind, n, q);
            if (json_out) {
                out << to_json(w).dump() << "\n";
            } else if (blocks && reduced) {
                out << blocks_string(w, rule_for(kind)) << "\n";
            } else if (blocks && kind == TableKind::A2) {
                out << full_blocks(w, s) << "\n";
            } else if (blocks) {
                err << "--blocks applies to reduced words and A2 full words\n";
                return 2;
            } else {
                out << to_string(w) << "\n";
            }
            return 0;
        }
        if (*verify) {
            if (table_s.empty() && rule_s.empty()) throw std::invalid_argument("need --table or --rule");
            if (word_s.empty())
                word_s.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
            RecognitionResult r;
            if (!table_s.empty()) {
                const TableKind kind = table_or_throw(table_s);
                r = recognize_table(parse_word(word_s, table(kind).alphabet), kind);
            } else {
                const auto rule = parse_rule(rule_s);
                if (!rule) throw std::invalid_argument("unknown rule '" + rule_s + "'");
                r = recognize_cyclic(parse_word(word_s, rule->m), *rule);
                if (r.accepted) {
                    const auto kind = parse_table(rule_s);
                    r.recognized = kind ? table_name(*kind) : rule_s;
                }
            }
            out << to_json(r).dump() << "\n";
            return r.accepted ? 0 : 3;
        }
        if (*sim) {
            const TableKind kind = table_or_throw(table_s);
            make_parameters(n, q);
            const LatticeModel model = build_model(kind);
            RationalRay ray = canonical_ray(model, n, q);
            if (!p0_s.empty()) ray.p0 = parse_point(p0_s);
            if (steps <= 0) steps = detect_period(model, ray).crossings;
            try {
                const auto events = trace(model, ray, steps);
                if (json_out) {
                    out << to_json(events, ray).dump() << "\n";
                } else {
                    for (const CrossingEvent& e : events) out << e.label;
                    out << "\n";
                }
            } catch (const SingularError& e) {
                err << "singular: vertex hit at t=" << format_rational(e.t()) << "\n";
                return 2;
            }
            return 0;
        }
        if (*cls) {
            const auto rule = parse_rule(rule_s);
            if (!rule) throw std::invalid_argument("unknown rule '" + rule_s + "'");
            const TranslationClass c = translation_class(make_parameters(n, q), *rule);
            if (json_out) {
                out << to_json(c).dump() << "\n";
            } else {
                for (size_t k = 0; k < c.members.size(); ++k) {
                    out << k << " C_" << c.members[k].structure.offset << " (";
                    const auto L = lengths(c.members[k].structure);
                    for (size_t i = 0; i < L.size(); ++i) out << (i ? "," : "") << L[i];
                    out << ") " << to_string(c.members[k].word) << "\n";
                }
            }
            return 0;
        }
        if (*self) return selftest(max_n, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace qbill::cli
