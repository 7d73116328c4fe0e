// chebcrypt command line: engine evaluation and benchmarks, protocol
// demos, Shamir tooling, quantum-attack cost table, TCP demo peer.
//
// Exit codes: 0 success, 1 protocol failure, 2 usage error.
#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "chebcrypt/modfield.hpp"
#include "chebcrypt/protocols.hpp"
#include "chebcrypt/qc_cost.hpp"
#include "chebcrypt/wire.hpp"

using namespace chebcrypt;

namespace {

struct Format {
    bool csv = false;
};

void print_kv(const Format& fmt, const std::vector<std::pair<std::string, std::string>>& rows) {
    if (fmt.csv) {
        for (size_t i = 0; i < rows.size(); ++i) {
            std::cout << rows[i].first << (i + 1 < rows.size() ? "," : "\n");
        }
        for (size_t i = 0; i < rows.size(); ++i) {
            std::cout << rows[i].second << (i + 1 < rows.size() ? "," : "\n");
        }
    } else {
        for (const auto& [k, v] : rows) {
            std::cout << k << "=" << v << "\n";
        }
    }
}

std::string value_string(const Real& v, long digits) {
    const Real ten = Real::from_long(10, Real::kMinDigits);
    if (abs_r(v) < ten) {
        return render_fixed(v, digits);
    }
    return v.to_decimal_string();
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

struct NegotiationRow {
    double wall_ms = 0;
    unsigned long long muls = 0;
    unsigned long long adds = 0;
    long equal_digits = 0;
};

NegotiationRow run_negotiation(Engine engine, long digits, long index_digits, Rng& rng) {
    const Real x = rng.symmetric_real("0.99", digits);
    const Degree a = rng.with_digits(index_digits);
    const Degree b = rng.with_digits(index_digits);

    OpCount total;
    const auto t0 = std::chrono::steady_clock::now();
    auto run = [&](const Real& v, const Degree& s) {
        switch (engine) {
            case Engine::trig:
                return eval_trig(v, s);
            case Engine::recurrence: {
                auto r = eval_recurrence(v, s);
                total.muls += r.ops.muls;
                total.adds += r.ops.adds;
                return r.value;
            }
            case Engine::cayley: {
                auto r = eval_cayley(v, s);
                total.muls += r.ops.muls;
                total.adds += r.ops.adds;
                return r.value;
            }
            case Engine::matrix:
            default: {
                auto r = eval_matrix(v, s);
                total.muls += r.ops.muls;
                total.adds += r.ops.adds;
                return r.value;
            }
        }
    };
    const Real a_inter = run(x, a);
    const Real b_inter = run(x, b);
    const Real a_secret = run(b_inter, a);
    const Real b_secret = run(a_inter, b);
    const auto t1 = std::chrono::steady_clock::now();

    NegotiationRow row;
    row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    row.muls = total.muls;
    row.adds = total.adds;
    row.equal_digits = agreement_digits(a_secret, b_secret);
    return row;
}

std::vector<uint8_t> load_document(const std::string& doc) {
    std::ifstream in(doc, std::ios::binary);
    if (in) {
        return std::vector<uint8_t>(std::istreambuf_iterator<char>(in),
                                    std::istreambuf_iterator<char>());
    }
    return std::vector<uint8_t>(doc.begin(), doc.end());
}

mpz_class parse_mpz(const std::string& s) {
    try {
        return mpz_class(s);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("not an integer: \"" + s + "\"");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chebyshev-polynomial cryptographic toolkit"};
    app.require_subcommand(1);

    uint64_t seed = 1;
    Format fmt;
    std::string format_name = "lines";
    app.add_option("--seed", seed, "Deterministic seed (same seed, same output)")
        ->capture_default_str();
    app.add_option("--format", format_name, "Output format: lines|csv")
        ->check(CLI::IsMember({"lines", "csv"}))
        ->capture_default_str();

    // --- eval ---
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate T_n(x) and print op counts");
    std::string eval_x = "0.5";
    std::string eval_n = "3";
    std::string eval_engine = "all";
    long eval_digits = 100;
    eval_cmd->add_option("--x", eval_x, "Evaluation point (decimal)")->capture_default_str();
    eval_cmd->add_option("--n", eval_n, "Degree (decimal integer)")->capture_default_str();
    eval_cmd->add_option("--engine", eval_engine, "recurrence|trig|matrix|cayley|all")
        ->capture_default_str();
    eval_cmd->add_option("--digits", eval_digits, "Working precision in decimal digits")
        ->capture_default_str();

    // --- bench ---
    auto* bench_cmd = app.add_subcommand("bench", "Two-party negotiation benchmark (CSV)");
    std::string bench_digits = "300";
    std::string bench_index = "200";
    std::string bench_engines = "trig,matrix,cayley";
    long bench_reps = 1;
    bench_cmd->add_option("--digits-list", bench_digits, "Comma list of precisions")
        ->capture_default_str();
    bench_cmd->add_option("--index-digits-list", bench_index, "Comma list of index sizes")
        ->capture_default_str();
    bench_cmd->add_option("--engines", bench_engines, "Comma list of engines")
        ->capture_default_str();
    bench_cmd->add_option("--reps", bench_reps, "Repetitions per combination")
        ->capture_default_str();

    // --- keyex ---
    auto* keyex_cmd = app.add_subcommand("keyex", "In-process two-party key exchange");
    long kx_digits = 300, kx_index = 60, kx_agree = 100;
    std::string kx_engine = "matrix";
    keyex_cmd->add_option("--digits", kx_digits)->capture_default_str();
    keyex_cmd->add_option("--index-digits", kx_index)->capture_default_str();
    keyex_cmd->add_option("--agree", kx_agree)->capture_default_str();
    keyex_cmd->add_option("--engine", kx_engine)->capture_default_str();

    // --- conf3 ---
    auto* conf_cmd = app.add_subcommand("conf3", "Three-party conference key agreement");
    long c3_digits = 0, c3_index = 40, c3_agree = 100;
    conf_cmd->add_option("--digits", c3_digits, "0 = plan automatically")->capture_default_str();
    conf_cmd->add_option("--index-digits", c3_index)->capture_default_str();
    conf_cmd->add_option("--agree", c3_agree)->capture_default_str();

    // --- elgamal ---
    auto* eg_cmd = app.add_subcommand("elgamal", "El Gamal encrypt/decrypt round trip");
    std::string eg_message = "123456789";
    long eg_digits = 300, eg_index = 60, eg_agree = 100;
    eg_cmd->add_option("--message", eg_message, "Positive integer message")->capture_default_str();
    eg_cmd->add_option("--digits", eg_digits)->capture_default_str();
    eg_cmd->add_option("--index-digits", eg_index)->capture_default_str();
    eg_cmd->add_option("--agree", eg_agree)->capture_default_str();

    // --- sign ---
    auto* sign_cmd = app.add_subcommand("sign", "Interactive signature round");
    std::string sign_doc = "example document";
    bool sign_tamper = false;
    long sg_digits = 200, sg_index = 40, sg_agree = 80;
    sign_cmd->add_option("--doc", sign_doc, "Document (file path, or literal text)")
        ->capture_default_str();
    sign_cmd->add_flag("--tamper", sign_tamper, "Alter the responder's stored copy");
    sign_cmd->add_option("--digits", sg_digits)->capture_default_str();
    sign_cmd->add_option("--index-digits", sg_index)->capture_default_str();
    sign_cmd->add_option("--agree", sg_agree)->capture_default_str();

    // --- group ---
    auto* group_cmd = app.add_subcommand("group", "Group secret: chained application");
    long gr_members = 3, gr_index = 40, gr_agree = 100;
    group_cmd->add_option("--members", gr_members)->capture_default_str();
    group_cmd->add_option("--index-digits", gr_index)->capture_default_str();
    group_cmd->add_option("--agree", gr_agree)->capture_default_str();

    // --- behalf ---
    auto* behalf_cmd = app.add_subcommand("behalf", "On-behalf-of-group secret + fingerprint");
    long bh_members = 2, bh_index = 105, bh_digits = 500;
    behalf_cmd->add_option("--members", bh_members)->capture_default_str();
    behalf_cmd->add_option("--index-digits", bh_index)->capture_default_str();
    behalf_cmd->add_option("--digits", bh_digits)->capture_default_str();

    // --- shamir ---
    auto* shamir_cmd = app.add_subcommand("shamir", "Secret sharing over a prime field");
    auto* deal_cmd = shamir_cmd->add_subcommand("deal", "Deal shares");
    std::string sh_secret = "7", sh_prime = "2147483647";
    long sh_threshold = 2, sh_count = 5;
    deal_cmd->add_option("--secret", sh_secret)->capture_default_str();
    deal_cmd->add_option("--threshold", sh_threshold, "Polynomial degree m")->capture_default_str();
    deal_cmd->add_option("--count", sh_count)->capture_default_str();
    deal_cmd->add_option("--prime", sh_prime)->capture_default_str();
    auto* rec_cmd = shamir_cmd->add_subcommand("reconstruct", "Reconstruct from shares");
    std::vector<std::string> sh_shares;
    std::string rc_prime = "2147483647";
    long rc_threshold = 2;
    rec_cmd->add_option("--share", sh_shares, "Share as z:y (repeatable)");
    rec_cmd->add_option("--threshold", rc_threshold)->capture_default_str();
    rec_cmd->add_option("--prime", rc_prime)->capture_default_str();
    shamir_cmd->require_subcommand(1);

    // --- qccost ---
    auto* qc_cmd = app.add_subcommand("qccost", "Quantum-attack resource table");
    long qc_bits = 2048;
    long qc_attack_digits = 0;
    qc_cmd->add_option("--bits", qc_bits, "RSA modulus size in bits")->capture_default_str();
    qc_cmd->add_option("--attack-digits", qc_attack_digits,
                       "Also print the classical powering cost at this precision")
        ->capture_default_str();

    // --- serve / connect ---
    auto* serve_cmd = app.add_subcommand("serve", "TCP responder (one session per connection)");
    long sv_port = wire::kDefaultPort;
    long sv_digits = 200, sv_agree = 100, sv_index = 40, sv_minsec = 60, sv_sessions = 1;
    std::string sv_pub_out;
    serve_cmd->add_option("--port", sv_port, "0 = ephemeral")->capture_default_str();
    serve_cmd->add_option("--digits", sv_digits)->capture_default_str();
    serve_cmd->add_option("--agree", sv_agree)->capture_default_str();
    serve_cmd->add_option("--index-digits", sv_index)->capture_default_str();
    serve_cmd->add_option("--min-security-bits", sv_minsec)->capture_default_str();
    serve_cmd->add_option("--sessions", sv_sessions, "Sessions to serve before exiting")
        ->capture_default_str();
    serve_cmd->add_option("--pub-out", sv_pub_out, "Write public parameters to this file");
    serve_cmd->set_config("--config");

    auto* conn_cmd = app.add_subcommand("connect", "TCP initiator");
    std::string cn_peer = "127.0.0.1:7311";
    std::string cn_pin;
    long cn_digits = 200, cn_agree = 100, cn_index = 40, cn_minsec = 60;
    conn_cmd->add_option("--peer", cn_peer, "host:port")->capture_default_str();
    conn_cmd->add_option("--pin", cn_pin, "File with the responder's public parameters");
    conn_cmd->add_option("--digits", cn_digits)->capture_default_str();
    conn_cmd->add_option("--agree", cn_agree)->capture_default_str();
    conn_cmd->add_option("--index-digits", cn_index)->capture_default_str();
    conn_cmd->add_option("--min-security-bits", cn_minsec)->capture_default_str();
    conn_cmd->set_config("--config");

    // Let --seed / --format appear after the subcommand name as well.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
        for (CLI::App* nested : sub->get_subcommands([](const CLI::App*) { return true; })) {
            nested->fallthrough();
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    fmt.csv = format_name == "csv";

    try {
        if (*eval_cmd) {
            const Real x = real_from_decimal(eval_x, eval_digits);
            const Degree n = parse_mpz(eval_n);
            std::vector<Engine> engines;
            if (eval_engine == "all") {
                engines = {Engine::recurrence, Engine::trig, Engine::matrix, Engine::cayley};
            } else {
                engines = {engine_from_string(eval_engine)};
            }
            if (fmt.csv) {
                std::cout << "engine,value,muls,adds\n";
            }
            for (Engine engine : engines) {
                std::string value;
                OpCount ops;
                switch (engine) {
                    case Engine::recurrence: {
                        auto r = eval_recurrence(x, n);
                        value = value_string(r.value, eval_digits);
                        ops = r.ops;
                        break;
                    }
                    case Engine::trig:
                        value = value_string(eval_trig(x, n), eval_digits);
                        break;
                    case Engine::matrix: {
                        auto r = eval_matrix(x, n);
                        value = value_string(r.value, eval_digits);
                        ops = r.ops;
                        break;
                    }
                    case Engine::cayley: {
                        auto r = eval_cayley(x, n);
                        value = value_string(r.value, eval_digits);
                        ops = r.ops;
                        break;
                    }
                }
                const char sep = fmt.csv ? ',' : '\t';
                std::cout << to_string(engine) << sep << value << sep << ops.muls << sep
                          << ops.adds << "\n";
            }
            return 0;
        }

        if (*bench_cmd) {
            Rng rng(seed);
            std::cout << "engine,digits,index_digits,wall_ms,muls,adds,equal_digits\n";
            if (bench_reps > 0) {
                for (const std::string& engine_name : split_list(bench_engines)) {
                    const Engine engine = engine_from_string(engine_name);
                    for (const std::string& ds : split_list(bench_digits)) {
                        for (const std::string& gs : split_list(bench_index)) {
                            const long d = std::stol(ds);
                            const long g = std::stol(gs);
                            if (engine == Engine::recurrence && g > 9) {
                                throw BadParams(
                                    "recurrence benchmark needs index-digits <= 9 (n < 2^32)");
                            }
                            for (long rep = 0; rep < bench_reps; ++rep) {
                                const NegotiationRow row = run_negotiation(engine, d, g, rng);
                                std::cout << engine_name << "," << d << "," << g << ","
                                          << row.wall_ms << "," << row.muls << "," << row.adds
                                          << "," << row.equal_digits << "\n";
                            }
                        }
                    }
                }
            }
            return 0;
        }

        if (*keyex_cmd) {
            Rng rng(seed);
            const Real x = rng.symmetric_real("0.99", kx_digits);
            const KeyPair alice = keygen(rng, kx_index, kx_digits, kx_agree, kx_index, x);
            const KeyPair bob = keygen(rng, kx_index, kx_digits, kx_agree, kx_index, x);
            const TwoPartyResult res = run_two_party(alice, bob, engine_from_string(kx_engine));
            print_kv(fmt, {{"equal_digits", std::to_string(res.equal_digits)},
                           {"digits_used", std::to_string(res.alice.digits_used)},
                           {"key_alice", res.alice.hex()},
                           {"key_bob", res.bob.hex()},
                           {"ok", res.alice.key_bytes == res.bob.key_bytes ? "1" : "0"}});
            return res.alice.key_bytes == res.bob.key_bytes ? 0 : 1;
        }

        if (*conf_cmd) {
            const long d = c3_digits > 0 ? c3_digits : precision_plan(c3_agree, 3, c3_index);
            Rng rng(seed);
            const Real x = rng.symmetric_real("0.99", d);
            std::array<SecretKey, 3> secrets;
            for (auto& s : secrets) {
                s.s = rng.with_digits(c3_index);
                s.digit_count = c3_index;
            }
            const ConferenceResult res = run_conference(secrets, x, c3_agree);
            print_kv(fmt, {{"digits", std::to_string(d)},
                           {"key_party0", res.keys[0].hex()},
                           {"key_party1", res.keys[1].hex()},
                           {"key_party2", res.keys[2].hex()}});
            return 0;
        }

        if (*eg_cmd) {
            Rng rng(seed);
            const KeyPair bob = keygen(rng, eg_index, eg_digits, eg_agree, eg_index);
            const mpz_class message = parse_mpz(eg_message);
            const ElGamalCiphertext ct = elgamal_encrypt(bob.pub, message, rng);
            const mpz_class recovered = elgamal_decrypt(bob.secret, ct);
            print_kv(fmt, {{"message", message.get_str()},
                           {"masked", ct.q.to_decimal_string()},
                           {"recovered", recovered.get_str()},
                           {"ok", recovered == message ? "1" : "0"}});
            return recovered == message ? 0 : 1;
        }

        if (*sign_cmd) {
            Rng rng(seed);
            const KeyPair responder = keygen(rng, sg_index, sg_digits, sg_agree, sg_index);
            const std::vector<uint8_t> doc = load_document(sign_doc);
            std::vector<uint8_t> stored = doc;
            if (sign_tamper && !stored.empty()) {
                stored[0] ^= 0x01;
            }
            const bool ok = run_signature_protocol(doc, {stored}, responder, rng);
            print_kv(fmt, {{"verified", ok ? "1" : "0"}});
            return ok ? 0 : 1;
        }

        if (*group_cmd) {
            const long d = precision_plan(gr_agree, gr_members + 1, gr_index);
            Rng rng(seed);
            const Real x = rng.symmetric_real("0.99", d);
            const GroupIssue issue = group_issue(x, gr_members, gr_index, gr_agree, rng);
            SecretKey alice{rng.with_digits(gr_index), gr_index};
            const Real request = dh_apply(alice, x);
            // Members apply their secrets in a seed-derived order.
            std::vector<SecretKey> order = issue.members;
            for (size_t i = order.size(); i > 1; --i) {
                std::swap(order[i - 1],
                          order[static_cast<size_t>(mpz_get_ui(rng.below(i).get_mpz_t()))]);
            }
            const Real chained = group_apply_chain(request, order);
            const Real direct = dh_apply(alice, issue.pub.y);
            const long eq = agreement_digits(chained, direct);
            print_kv(fmt, {{"digits", std::to_string(d)},
                           {"members", std::to_string(gr_members)},
                           {"equal_digits", std::to_string(eq)},
                           {"ok", eq >= gr_agree ? "1" : "0"}});
            return eq >= gr_agree ? 0 : 1;
        }

        if (*behalf_cmd) {
            Rng rng(seed);
            const Real x = rng.symmetric_real("0.99", bh_digits);
            const BehalfIssue issue = behalf_issue(x, bh_members, bh_index, 100, rng);
            SecretKey alice{rng.with_digits(bh_index), bh_index};
            const Real y_alice = dh_apply(alice, x);
            const Real alice_secret = dh_apply(alice, issue.pub.y);
            std::vector<Real> peers;
            for (const auto& m : issue.members) {
                peers.push_back(behalf_secret(m, y_alice));
            }
            std::vector<std::pair<std::string, std::string>> rows;
            for (size_t i = 0; i < peers.size(); ++i) {
                rows.emplace_back("peer" + std::to_string(i) + "_vs_alice",
                                  std::to_string(agreement_digits(peers[i], alice_secret)));
            }
            for (size_t i = 0; i < peers.size(); ++i) {
                for (size_t j = i + 1; j < peers.size(); ++j) {
                    const Fingerprint fp = fingerprint(peers[i], peers[j], bh_digits);
                    rows.emplace_back(
                        "divergence_peer" + std::to_string(i) + "_peer" + std::to_string(j),
                        std::to_string(fp.divergence_window.first));
                }
            }
            print_kv(fmt, rows);
            return 0;
        }

        if (*shamir_cmd) {
            if (*deal_cmd) {
                Rng rng(seed);
                const PrimeField field(parse_mpz(sh_prime));
                const auto shares =
                    shamir_deal(parse_mpz(sh_secret), sh_threshold, sh_count, field, rng);
                if (fmt.csv) {
                    std::cout << "z,y\n";
                }
                for (const Share& s : shares) {
                    std::cout << s.z.get_str() << (fmt.csv ? "," : "\t") << s.y.get_str() << "\n";
                }
                return 0;
            }
            const PrimeField field(parse_mpz(rc_prime));
            std::vector<Share> shares;
            for (const std::string& s : sh_shares) {
                const size_t colon = s.find(':');
                if (colon == std::string::npos) {
                    throw CLI::ValidationError("--share must look like z:y");
                }
                shares.push_back(
                    Share{parse_mpz(s.substr(0, colon)), parse_mpz(s.substr(colon + 1))});
            }
            const mpz_class secret = shamir_reconstruct(shares, rc_threshold, field);
            print_kv(fmt, {{"secret", secret.get_str()}});
            return 0;
        }

        if (*qc_cmd) {
            std::cout << qc_cost_table(qc_bits);
            if (qc_attack_digits > 0) {
                const auto [muls, adds] = matrix_attack_ops(qc_attack_digits);
                std::cout << "classical powering at " << qc_attack_digits
                          << " digits: " << muls.get_str() << " muls, " << adds.get_str()
                          << " adds\n";
            }
            return 0;
        }

        if (*serve_cmd) {
            Rng rng(seed);
            const KeyPair keys =
                keygen(rng, sv_index, sv_digits, sv_agree, sv_index);
            const wire::SessionConfig cfg{sv_digits, sv_agree, sv_index, sv_minsec};
            if (!sv_pub_out.empty()) {
                std::ofstream out(sv_pub_out);
                out << "x=" << render_fixed(keys.pub.x, sv_digits) << "\n"
                    << "y=" << render_fixed(keys.pub.y, sv_digits) << "\n";
            }
            wire::Listener listener(static_cast<uint16_t>(sv_port));
            std::cout << "listening\t" << listener.port() << "\n" << std::flush;
            int rc = 0;
            for (long s = 0; s < sv_sessions; ++s) {
                try {
                    wire::LineChannel channel = listener.accept_one();
                    const SessionKey key = wire::run_responder(channel, keys, cfg);
                    std::cout << "key\t" << key.hex() << "\n" << std::flush;
                } catch (const Error& e) {
                    std::cout << "fail\t" << e.what() << "\n" << std::flush;
                    rc = 1;
                }
            }
            return rc;
        }

        if (*conn_cmd) {
            const size_t colon = cn_peer.rfind(':');
            if (colon == std::string::npos) {
                throw CLI::ValidationError("--peer must look like host:port");
            }
            const std::string host = cn_peer.substr(0, colon);
            const uint16_t port = static_cast<uint16_t>(std::stoul(cn_peer.substr(colon + 1)));
            const wire::SessionConfig cfg{cn_digits, cn_agree, cn_index, cn_minsec};
            std::optional<PublicParams> pinned;
            if (!cn_pin.empty()) {
                std::ifstream in(cn_pin);
                if (!in) {
                    throw CLI::ValidationError("cannot read pin file " + cn_pin);
                }
                PublicParams p;
                std::string line;
                while (std::getline(in, line)) {
                    if (line.rfind("x=", 0) == 0) {
                        p.x = real_from_decimal(line.substr(2), cn_digits);
                    } else if (line.rfind("y=", 0) == 0) {
                        p.y = real_from_decimal(line.substr(2), cn_digits);
                    }
                }
                p.precision_digits = cn_digits;
                p.agree_digits = cn_agree;
                p.max_index_digits = cn_index;
                pinned = p;
            }
            Rng rng(seed);
            wire::LineChannel channel = wire::connect_to(host, port);
            const SessionKey key = wire::run_initiator(channel, cfg, rng, pinned);
            std::cout << "key\t" << key.hex() << "\n";
            return 0;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const BadParams& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const PrecisionTooLow& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "protocol failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
