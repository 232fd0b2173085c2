// quadprime: character tables, prime-ideal norm sieves, prime classification,
// lattice atlases, and oracle verification for quadratic fields.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or precondition error.

#include "quadprime/quadprime.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace qp = quadprime;

namespace {

struct FieldOpts {
    std::optional<int64_t> radicand;
    std::optional<int64_t> discriminant;
};

void add_field_options(CLI::App* cmd, FieldOpts& o) {
    cmd->add_option("-r,--radicand", o.radicand,
                    "radicand of Q(sqrt(r)); non-square, reduced to its squarefree part");
    cmd->add_option("-d,--discriminant", o.discriminant,
                    "field discriminant; alternative to -r, checked for consistency");
}

// Builds the field, reporting squarefree reduction on `info` so the user
// sees the true field.
qp::FieldParams resolve_field(const FieldOpts& o, std::ostream& info) {
    if (!o.radicand && !o.discriminant)
        throw std::domain_error("specify the field with -r/--radicand or -d/--discriminant");
    if (o.radicand) {
        qp::FieldParams f = qp::make_field(*o.radicand);
        if (f.r != *o.radicand)
            info << "r=" << f.r << " (reduced from " << *o.radicand << ")\n";
        if (o.discriminant && *o.discriminant != f.d)
            throw std::domain_error("-d " + std::to_string(*o.discriminant) +
                                    " does not match radicand " + std::to_string(*o.radicand) +
                                    ", which gives d=" + std::to_string(f.d));
        return f;
    }
    const int64_t d = *o.discriminant;
    int64_t r;
    if (qp::mod_floor(d, 4) == 1) r = d;
    else if (qp::mod_floor(d, 4) == 0) r = d / 4;
    else throw std::domain_error("a discriminant is 0 or 1 mod 4");
    qp::FieldParams f = qp::make_field(r);
    if (f.d != d)
        throw std::domain_error(std::to_string(d) + " is not a fundamental discriminant");
    return f;
}

int64_t abs64(int64_t v) { return v < 0 ? qp::checked_neg(v) : v; }

void check_memory_cap(int64_t max, const qp::FieldParams& f) {
    const char* env = std::getenv("QUADPRIME_MAX_MEMORY");
    if (!env || !*env) return;
    int64_t cap = 0;
    try {
        std::size_t pos = 0;
        cap = std::stoll(env, &pos);
        if (pos != std::strlen(env) || cap <= 0) throw std::invalid_argument("");
    } catch (...) {
        throw std::domain_error("QUADPRIME_MAX_MEMORY must be a positive byte count");
    }
    int64_t need = max / 8 + 1 + 2 * abs64(f.d);
    if (qp::mod_floor(f.d, 8) == 5) need += max / 32 + 1;
    if (need > cap)
        throw std::domain_error("sieve to max=" + std::to_string(max) + " needs about " +
                                std::to_string(need) + " bytes, above QUADPRIME_MAX_MEMORY=" +
                                std::to_string(cap));
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

qp::RenderConfig load_render_config(const std::string& path) {
    qp::RenderConfig cfg;
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open config file " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::domain_error(path + ":" + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        auto as_bool = [&] {
            if (value == "true" || value == "1") return true;
            if (value == "false" || value == "0") return false;
            throw std::domain_error(path + ":" + std::to_string(lineno) + ": expected a boolean");
        };
        if (key == "cell_size") {
            cfg.cell_size = std::stod(value);
            if (!(cfg.cell_size > 0))
                throw std::domain_error(path + ": cell_size must be positive");
        } else if (key == "unit_color") cfg.unit_color = value;
        else if (key == "prime_color") cfg.prime_color = value;
        else if (key == "ideal_color") cfg.ideal_color = value;
        else if (key == "conj_ideal_color") cfg.conj_ideal_color = value;
        else if (key == "other_color") cfg.other_color = value;
        else if (key == "show_character_row") cfg.show_character_row = as_bool();
        else if (key == "character_row_width") {
            cfg.character_row_width = std::stoll(value);
            if (cfg.character_row_width <= 0)
                throw std::domain_error(path + ": character_row_width must be positive");
        } else {
            throw std::domain_error(path + ":" + std::to_string(lineno) + ": unknown key '" +
                                    key + "'");
        }
    }
    return cfg;
}

// Rejects an ideal request with the precise reason, divisibility included.
qp::IdealSpec checked_ideal(const qp::FieldParams& f, int64_t m, int64_t shift) {
    const std::string name = "ideal [" + std::to_string(m) + ", " + std::to_string(shift) + "]";
    if (m <= 0 || !qp::is_prime(m))
        throw std::domain_error(name + " rejected: " + std::to_string(m) + " is not prime");
    if (qp::kronecker(f.d, m) < 0)
        throw std::domain_error(name + " rejected: " + std::to_string(m) +
                                " is inert, so no prime ideal has norm " + std::to_string(m));
    if (shift < 0 || shift >= m)
        throw std::domain_error(name + " rejected: shift must lie in [0, " +
                                std::to_string(m) + ")");
    const int64_t nv = qp::norm(f, qp::RingElement{shift, 1});
    if (nv % m != 0)
        throw std::domain_error(name + " rejected: " + std::to_string(m) +
                                " does not divide N(" + std::to_string(shift) +
                                " + tau) = " + std::to_string(nv));
    return {m, shift};
}

void write_output(const std::string& doc, const std::optional<std::string>& path) {
    if (!path) {
        std::cout << doc;
        return;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) throw std::domain_error("cannot open output file " + *path);
    out.write(doc.data(), static_cast<std::streamsize>(doc.size()));
    if (!out) throw std::domain_error("failed writing " + *path);
    std::cerr << "wrote " << *path << " (" << doc.size() << " bytes)\n";
}

int run_character(const FieldOpts& fo, int64_t width) {
    const qp::FieldParams f = resolve_field(fo, std::cout);
    const qp::CharacterTable t = qp::build_character(f);
    std::cout << "d=" << f.d << "\n" << qp::character_row(t, width) << "\n";
    return 0;
}

int run_sieve(const FieldOpts& fo, int64_t max, const std::string& format,
              const std::optional<std::string>& output) {
    const qp::FieldParams f = resolve_field(fo, std::cerr);
    check_memory_cap(max, f);
    const qp::NormSet T = qp::sieve_norms_odd(f, max);

    if (format == "binary") {
        if (output) {
            std::ofstream out(*output, std::ios::binary);
            if (!out) throw std::domain_error("cannot open output file " + *output);
            qp::dump_norms(T, out);
            std::cerr << "wrote " << *output << "\n";
        } else {
            qp::dump_norms(T, std::cout);
        }
    } else {
        std::ostream* os = &std::cout;
        std::ofstream file;
        if (output) {
            file.open(*output);
            if (!file) throw std::domain_error("cannot open output file " + *output);
            os = &file;
        }
        T.members.for_each([&](int64_t n) { *os << n << '\n'; });
    }

    // summary by splitting behavior; needs primality of members
    if (max <= 100000000) {
        std::vector<bool> prime(static_cast<std::size_t>(max) + 1, true);
        prime[0] = false;
        if (max >= 1) prime[1] = false;
        for (int64_t i = 2; i <= max / i; ++i)
            if (prime[static_cast<std::size_t>(i)])
                for (int64_t j = i * i; j <= max; j += i) prime[static_cast<std::size_t>(j)] = false;
        int64_t split = 0, ramified = 0, inert_sq = 0, inert_prod = 0;
        T.members.for_each([&](int64_t n) {
            if (prime[static_cast<std::size_t>(n)]) {
                if (qp::kronecker(f.d, n) == 0) ++ramified;
                else ++split;
            } else {
                const int64_t r = qp::isqrt(n);
                if (r * r == n && prime[static_cast<std::size_t>(r)]) ++inert_sq;
                else ++inert_prod;
            }
        });
        std::cerr << "T(d=" << f.d << ", max=" << max << "): " << T.members.count()
                  << " members (" << split << " split primes, " << ramified
                  << " ramified, " << inert_sq << " inert squares, " << inert_prod
                  << " inert products)\n";
    } else {
        std::cerr << "T(d=" << f.d << ", max=" << max << "): " << T.members.count()
                  << " members\n";
    }
    return 0;
}

int run_classify(const FieldOpts& fo, const std::vector<int64_t>& primes) {
    const qp::FieldParams f = resolve_field(fo, std::cerr);
    for (int64_t p : primes) {
        const qp::SplitType s = qp::classify_prime(f, p);
        const char* name = s == qp::SplitType::Split ? "split"
                           : s == qp::SplitType::Ramified ? "ramified"
                                                          : "inert";
        std::cout << p << ": " << name << "\n";
    }
    return 0;
}

struct AtlasOpts {
    std::optional<int64_t> box;
    std::optional<int64_t> x_min, x_max, y_min, y_max;
    std::optional<int64_t> max;
    std::optional<int64_t> ideal_norm, ideal_shift;
    bool ideal_auto = false;
    std::string format = "svg";
    std::optional<std::string> output;
    std::optional<int64_t> width;
    std::optional<std::string> config;
};

int run_atlas(const FieldOpts& fo, const AtlasOpts& o) {
    const qp::FieldParams f = resolve_field(fo, std::cerr);

    qp::Region rg;
    const bool any_bound = o.x_min || o.x_max || o.y_min || o.y_max;
    if (any_bound) {
        if (o.box) throw std::domain_error("--box excludes explicit region bounds");
        if (!(o.x_min && o.x_max && o.y_min && o.y_max))
            throw std::domain_error("give all of --xmin --xmax --ymin --ymax");
        rg = {*o.x_min, *o.x_max, *o.y_min, *o.y_max};
    } else {
        const int64_t b = o.box.value_or(40);
        if (b < 0) throw std::domain_error("--box must be non-negative");
        rg = {-b, b, -b, b};
    }
    if (rg.x_min > rg.x_max || rg.y_min > rg.y_max)
        throw std::domain_error("region bounds out of order");

    const int64_t need = std::max<int64_t>(qp::region_max_norm(f, rg), 2);
    int64_t bound = need;
    if (o.max) {
        if (*o.max < need)
            throw std::domain_error("--max " + std::to_string(*o.max) +
                                    " is below the region's maximum norm " +
                                    std::to_string(need));
        bound = *o.max;
    }
    check_memory_cap(bound, f);
    const qp::NormSet T = qp::sieve_norms_odd(f, bound);
    std::cerr << "field Q(sqrt(" << f.r << ")), d=" << f.d << ", sieve bound " << bound
              << "\n";

    std::optional<qp::IdealSpec> ideal;
    if (o.ideal_auto) {
        if (o.ideal_norm || o.ideal_shift)
            throw std::domain_error("--ideal-auto excludes --ideal-norm/--ideal-shift");
        ideal = qp::find_default_ideal(f);
    } else if (o.ideal_norm || o.ideal_shift) {
        if (!(o.ideal_norm && o.ideal_shift))
            throw std::domain_error("give both --ideal-norm and --ideal-shift");
        ideal = checked_ideal(f, *o.ideal_norm, *o.ideal_shift);
    }
    if (ideal) {
        const qp::IdealSpec conj = qp::conjugate_ideal(f, *ideal);
        std::cerr << "ideal I = [" << ideal->m << ", " << ideal->shift
                  << " + tau], conjugate shift " << conj.shift << "\n";
    }

    qp::RenderConfig cfg;
    if (o.config) cfg = load_render_config(*o.config);
    if (o.width) {
        if (*o.width <= 0) throw std::domain_error("--width must be positive");
        cfg.character_row_width = *o.width;
    }

    const auto atlas = qp::enumerate_atlas(f, rg, T, ideal);
    const std::string doc = o.format == "text" ? qp::render_text(atlas, f)
                                               : qp::render_svg(atlas, f, cfg);
    write_output(doc, o.output);
    return 0;
}

int run_verify(const FieldOpts& fo, std::optional<int64_t> max_opt,
               const std::optional<std::string>& load) {
    const qp::FieldParams f = resolve_field(fo, std::cerr);

    qp::NormSet T;
    int64_t max;
    if (load) {
        std::ifstream in(*load, std::ios::binary);
        if (!in) throw std::domain_error("cannot open " + *load);
        T = qp::load_norms(in);
        if (T.d != f.d)
            throw std::domain_error(*load + " holds a set for d=" + std::to_string(T.d) +
                                    ", not d=" + std::to_string(f.d));
        if (max_opt && *max_opt != T.max)
            throw std::domain_error("--max disagrees with the max stored in " + *load);
        max = T.max;
    } else {
        if (!max_opt) throw std::domain_error("verify needs --max (or --load)");
        max = *max_opt;
    }
    if (max < 2 || max > 1000000)
        throw std::domain_error("verify: max must lie in [2, 1000000] (oracle cost)");
    check_memory_cap(max, f);
    if (!load) T = qp::sieve_norms_odd(f, max);

    int64_t bad = 0;

    // character construction vs the Kronecker symbol
    {
        const qp::CharacterTable t = qp::build_character(f);
        const int64_t range = qp::checked_mul(2, t.period);
        int64_t mism = 0;
        for (int64_t x = -range; x <= range; ++x)
            if (qp::chi(t, x) != qp::kronecker(f.d, x)) {
                if (mism < 5)
                    std::cout << "character mismatch at x=" << x << ": chi=" << qp::chi(t, x)
                              << " kronecker=" << qp::kronecker(f.d, x) << "\n";
                ++mism;
            }
        if (qp::mod_floor(f.d, 2) != 0) {
            const qp::CharacterTable ot = qp::odd_character(f);
            for (int64_t x = 1; x <= 2 * ot.period; x += 2)
                if (qp::chi(ot, x) != qp::kronecker(f.d, x)) {
                    if (mism < 5) std::cout << "odd-character mismatch at x=" << x << "\n";
                    ++mism;
                }
        }
        std::cout << "character vs kronecker: "
                  << (mism == 0 ? "OK" : "FAIL (" + std::to_string(mism) + " mismatches)")
                  << "\n";
        bad += mism;
    }

    // sieve vs trial-division classification
    {
        const qp::NormSet R = qp::verify::reference_norm_set(f, max);
        const std::vector<int64_t> diff = qp::verify::diff_members(T, R);
        for (std::size_t i = 0; i < diff.size() && i < 10; ++i) {
            const int64_t n = diff[i];
            std::cout << "norm-set mismatch at " << n << ": sieve="
                      << (T.members.test(n) ? "in" : "out") << " oracle="
                      << (R.members.test(n) ? "in" : "out") << "\n";
        }
        std::cout << "sieve vs factorization oracle: "
                  << (diff.empty() ? "OK" : "FAIL (" + std::to_string(diff.size()) +
                                                " mismatches)")
                  << "\n";
        bad += static_cast<int64_t>(diff.size());
    }

    // point classification vs irreducibility, UFD ground truth
    if (f.r == -1 || f.r == -3) {
        const qp::Region rg{-40, 40, -40, 40};
        const int64_t need = std::max<int64_t>(qp::region_max_norm(f, rg), 2);
        const qp::NormSet Tp = qp::sieve_norms_odd(f, need);
        int64_t mism = 0;
        for (int64_t y = rg.y_min; y <= rg.y_max; ++y)
            for (int64_t x = rg.x_min; x <= rg.x_max; ++x) {
                const qp::RingElement z{x, y};
                if (qp::classify_point(f, Tp, std::nullopt, z) !=
                    qp::verify::reference_point_class(f, z)) {
                    if (mism < 5)
                        std::cout << "point mismatch at (" << x << ", " << y << ")\n";
                    ++mism;
                }
            }
        std::cout << "points vs irreducibility oracle: "
                  << (mism == 0 ? "OK" : "FAIL (" + std::to_string(mism) + " mismatches)")
                  << "\n";
        bad += mism;
    }

    return bad == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"prime atlases of quadratic fields: characters, norm sieves, ideals"};
    app.require_subcommand(1);

    FieldOpts char_f;
    int64_t char_width = 0;
    CLI::App* c_char = app.add_subcommand("character", "print one period of the quadratic character");
    add_field_options(c_char, char_f);
    c_char->add_option("--width", char_width, "truncate the row to this many entries (0 = full period)");

    FieldOpts sieve_f;
    int64_t sieve_max = 0;
    std::string sieve_format = "list";
    std::optional<std::string> sieve_out;
    CLI::App* c_sieve = app.add_subcommand("sieve", "list all prime-ideal norms up to max");
    add_field_options(c_sieve, sieve_f);
    c_sieve->add_option("--max", sieve_max, "upper bound for the norms")->required();
    c_sieve->add_option("--format", sieve_format, "list (one norm per line) or binary dump")
        ->check(CLI::IsMember({"list", "binary"}));
    c_sieve->add_option("-o,--output", sieve_out, "write to a file instead of stdout");

    FieldOpts classify_f;
    std::vector<int64_t> classify_primes;
    CLI::App* c_classify = app.add_subcommand("classify", "report split/ramified/inert for primes");
    add_field_options(c_classify, classify_f);
    c_classify->add_option("primes", classify_primes, "rational primes to classify")->required();

    FieldOpts atlas_f;
    AtlasOpts atlas_o;
    CLI::App* c_atlas = app.add_subcommand("atlas", "render the lattice atlas of a region");
    add_field_options(c_atlas, atlas_f);
    c_atlas->add_option("--box", atlas_o.box, "symmetric region |x|,|y| <= N (default 40)");
    c_atlas->add_option("--xmin", atlas_o.x_min, "region lower x bound");
    c_atlas->add_option("--xmax", atlas_o.x_max, "region upper x bound");
    c_atlas->add_option("--ymin", atlas_o.y_min, "region lower y bound");
    c_atlas->add_option("--ymax", atlas_o.y_max, "region upper y bound");
    c_atlas->add_option("--max", atlas_o.max, "sieve bound override (>= the region's max norm)");
    c_atlas->add_option("--ideal-norm", atlas_o.ideal_norm, "norm of the displayed ideal I");
    c_atlas->add_option("--ideal-shift", atlas_o.ideal_shift, "shift of the displayed ideal I");
    c_atlas->add_flag("--ideal-auto", atlas_o.ideal_auto,
                      "pick the smallest valid split-prime ideal");
    c_atlas->add_option("--format", atlas_o.format, "svg or text")
        ->check(CLI::IsMember({"svg", "text"}));
    c_atlas->add_option("-o,--output", atlas_o.output, "output file (default stdout)");
    c_atlas->add_option("--width", atlas_o.width, "character row width in the header");
    c_atlas->add_option("--config", atlas_o.config, "key=value styling file");

    FieldOpts verify_f;
    std::optional<int64_t> verify_max;
    std::optional<std::string> verify_load;
    CLI::App* c_verify = app.add_subcommand("verify", "diff the fast paths against brute-force oracles");
    add_field_options(c_verify, verify_f);
    c_verify->add_option("--max", verify_max, "oracle range (<= 1e6)");
    c_verify->add_option("--load", verify_load, "check a binary norm-set dump instead of sieving");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_char) return run_character(char_f, char_width);
        if (*c_sieve) return run_sieve(sieve_f, sieve_max, sieve_format, sieve_out);
        if (*c_classify) return run_classify(classify_f, classify_primes);
        if (*c_atlas) return run_atlas(atlas_f, atlas_o);
        if (*c_verify) return run_verify(verify_f, verify_max, verify_load);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
