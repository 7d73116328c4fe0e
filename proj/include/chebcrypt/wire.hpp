// Line-oriented wire protocol and TCP demo peer. Two processes perform
// the proof-of-knowledge and authenticated key exchange over a socket:
//
//   initiator                     responder
//     HELLO cfg        ------>
//                      <------    HELLO cfg          (or FAIL config_mismatch)
//                      <------    PUB x y
//     CHAL T_r(x)      ------>
//                      <------    RESP T_s(chal)
//     CONFIRM N digest ------>                       (only after RESP verified)
//                      <------    CONFIRM k digest   (k = N, or N-5 on a
//     CONFIRM k digest ------>                        truncation boundary)
//
// Values travel as fixed-point decimal strings rendered at full precision,
// so the exchange is bit-exact across implementations. One session per
// connection, strictly alternating turns.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chebcrypt/protocols.hpp"
#include "chebcrypt/rng.hpp"

namespace chebcrypt::wire {

constexpr uint16_t kDefaultPort = 7311;
constexpr int kDefaultTimeoutSec = 30;
constexpr size_t kMaxLineBytes = 64 * 1024;
constexpr const char* kProtocolVersion = "1";

enum class Kind { hello, pub, chal, resp, confirm, fail };

const char* to_string(Kind kind);

struct WireMessage {
    Kind kind = Kind::fail;
    std::vector<std::string> fields;
};

// KIND\tfield\t...\n; decode rejects anything that does not parse back.
std::string encode(const WireMessage& msg);
WireMessage decode(std::string_view line);  // throws MalformedMessage

struct SessionConfig {
    long precision_digits = 0;   // D
    long agree_digits = 0;       // N
    long max_index_digits = 0;
    long min_security_bits = 0;

    WireMessage hello() const;
    static SessionConfig from_hello(const WireMessage& msg);
};

// Square-root attack on the index space: half the index bits.
long security_bits_for_index_digits(long index_digits);

// Blocking line-oriented TCP stream with a per-message timeout.
class LineChannel {
public:
    explicit LineChannel(int fd, int timeout_sec = kDefaultTimeoutSec);
    LineChannel(LineChannel&& other) noexcept;
    LineChannel& operator=(LineChannel&& other) noexcept;
    LineChannel(const LineChannel&) = delete;
    LineChannel& operator=(const LineChannel&) = delete;
    ~LineChannel();

    void send(const WireMessage& msg);
    WireMessage recv();  // throws Timeout / MalformedMessage / SocketError

private:
    int fd_ = -1;
    std::string buffer_;
};

class Listener {
public:
    // port 0 binds an ephemeral port; port() reports the actual one.
    explicit Listener(uint16_t port);
    ~Listener();
    Listener(const Listener&) = delete;
    Listener& operator=(const Listener&) = delete;

    uint16_t port() const { return port_; }
    LineChannel accept_one(int timeout_sec = kDefaultTimeoutSec);

private:
    int fd_ = -1;
    uint16_t port_ = 0;
};

LineChannel connect_to(const std::string& host, uint16_t port,
                       int timeout_sec = kDefaultTimeoutSec);

// Serves exactly one session on an accepted connection. The responder
// owns `keys`; its published parameters travel in PUB.
SessionKey run_responder(LineChannel& channel, const KeyPair& keys, const SessionConfig& config);

// Initiates one session. When pinned_peer is set, the received PUB must
// match it (AuthFailed otherwise); when empty the parameters are taken
// on first use. The responder must prove possession of the secret for
// the pinned y before any key material is confirmed.
SessionKey run_initiator(LineChannel& channel, const SessionConfig& config, Rng& rng,
                         const std::optional<PublicParams>& pinned_peer = std::nullopt);

}  // namespace chebcrypt::wire
