/*
 * Copyright 2026 The l2disc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "l2disc/error.hpp"
#include "l2disc/lldp_engine.hpp"

#include "support/drive.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

using namespace l2disc;
using support::drive;
using support::emission_times;
using support::sec;
using support::secs;

namespace {

const MacAddress r1_mac = *MacAddress::parse("02:00:00:00:01:00");

LldpLocalMib mib(std::string name = "R1")
{
    return {r1_mac, std::move(name), "sim router", lldp_cap::router, lldp_cap::router, Ipv4Address::parse("10.0.12.1")};
}

LldpAgentConfig agent(std::string port = "eth0")
{
    LldpAgentConfig a;
    a.port = port;
    a.port_description = port;
    a.if_index = 1;
    return a;
}

LldpAgentConfig validation_agent(std::string port = "eth0")
{
    auto a = agent(std::move(port));
    a.msg_tx_interval = 60;
    a.msg_tx_hold = lldp_hold_for_ttl(60, 180);
    return a;
}

LldpFrame frame_from(std::string_view chassis, std::uint16_t ttl = 180)
{
    LldpFrame f;
    f.chassis_id = LldpId::chassis_mac(*MacAddress::parse(chassis));
    f.port_id = LldpId::interface_name("eth0");
    f.ttl = ttl;
    f.optional_tlvs = {LldpTlv::system_name("R2"), LldpTlv::system_capabilities(lldp_cap::router, lldp_cap::router)};
    return f;
}

Errc config_error(LldpAgentConfig a)
{
    try {
        LldpEngine e(mib(), {a});
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::io_error;
}

} // namespace

TEST(LldpConfig, Defaults)
{
    LldpAgentConfig a;
    EXPECT_EQ(a.msg_tx_interval, 30);
    EXPECT_EQ(a.msg_tx_hold, 4);
    EXPECT_EQ(a.advertised_ttl(), 120);
    EXPECT_EQ(a.tx_fast_init, 3);
    EXPECT_EQ(a.tx_credit_max, 5);
    EXPECT_EQ(a.destination, mac::lldp_nearest_bridge);
}

TEST(LldpConfig, FastInitRange)
{
    auto a = agent();
    for (int n : {1, 8})
        EXPECT_NO_THROW((a.tx_fast_init = n, LldpEngine(mib(), {a})));
    for (int n : {0, 9}) {
        a.tx_fast_init = n;
        EXPECT_EQ(config_error(a), Errc::invalid_config);
    }
}

TEST(LldpConfig, ValidationHold)
{
    EXPECT_EQ(lldp_hold_for_ttl(60, 180), 3);
    EXPECT_THROW(lldp_hold_for_ttl(60, 100), Error);
    EXPECT_EQ(validation_agent().advertised_ttl(), 180);
}

TEST(LldpConfig, TtlSaturates)
{
    auto a = agent();
    a.msg_tx_interval = 3600;
    a.msg_tx_hold = 100;
    EXPECT_EQ(a.advertised_ttl(), 65535);
}

TEST(LldpConfig, EnabledMustBeSubset)
{
    auto m = mib();
    m.enabled_capabilities = lldp_cap::bridge;
    EXPECT_THROW(LldpEngine(m, {agent()}), Error);
}

TEST(LldpFrameBuild, DefaultTtl)
{
    LldpEngine e(mib(), {agent()});
    auto f = e.build_frame("eth0", sec(0));
    EXPECT_EQ(f.ttl, 120);
    EXPECT_EQ(f.chassis_id, LldpId::chassis_mac(r1_mac));
    EXPECT_EQ(f.port_id, LldpId::interface_name("eth0"));
    EXPECT_EQ(*f.get<std::string>(LldpTlvType::system_name), "R1");
    EXPECT_EQ(f.get<LldpManagementAddress>(LldpTlvType::management_address)->as_ipv4(), Ipv4Address::parse("10.0.12.1"));
}

TEST(LldpFrameBuild, ValidationTtl)
{
    LldpEngine e(mib(), {validation_agent()});
    EXPECT_EQ(e.build_frame("eth0", sec(0)).ttl, 180);
}

TEST(LldpFrameBuild, RxOnlyRejected)
{
    auto a = agent();
    a.admin_status = LldpAdminStatus::rx_only;
    LldpEngine e(mib(), {a});
    try {
        e.build_frame("eth0", sec(0));
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.code(), Errc::agent_not_transmitting);
    }
}

TEST(LldpFrameBuild, ShutdownFrame)
{
    LldpEngine e(mib(), {agent()});
    auto f = e.shutdown_frame("eth0");
    EXPECT_EQ(f.ttl, 0);
    EXPECT_TRUE(f.optional_tlvs.empty());
    auto bytes = encode_lldp(f);
    // chassis (9) + port (7) + ttl (4) + end (2)
    EXPECT_EQ(bytes.size(), 22u);
}

TEST(LldpSchedule, ValidationConfigFastStart)
{
    LldpEngine e(mib(), {validation_agent()});
    e.port_up("eth0", sec(0));
    EXPECT_EQ(emission_times(e, sec(200)), secs({0, 1, 2, 62, 122, 182}));
}

TEST(LldpSchedule, DefaultConfigPeriod)
{
    LldpEngine e(mib(), {agent()});
    e.port_up("eth0", sec(0));
    EXPECT_EQ(emission_times(e, sec(100)), secs({0, 1, 2, 32, 62, 92}));
}

TEST(LldpSchedule, RestartAfterOutage)
{
    LldpEngine e(mib(), {validation_agent()});
    e.port_up("eth0", sec(0));
    drive(e, sec(50));
    e.port_down("eth0", sec(50));
    EXPECT_TRUE(drive(e, sec(199)).empty());
    e.port_up("eth0", sec(200));
    EXPECT_EQ(emission_times(e, sec(262)), secs({200, 201, 202, 262}));
}

TEST(LldpSchedule, FastInitCounts)
{
    for (int n : {1, 3, 8}) {
        auto a = validation_agent();
        a.tx_fast_init = n;
        LldpEngine e(mib(), {a});
        e.port_up("eth0", sec(0));
        auto t = emission_times(e, sec(59));
        EXPECT_EQ(static_cast<int>(t.size()), n);
        for (int i = 0; i < n; ++i)
            EXPECT_EQ(t[i], sec(i));
    }
}

TEST(LldpSchedule, NewNeighborDoesNotRestartRunningFastStart)
{
    LldpEngine e(mib(), {validation_agent()});
    e.port_up("eth0", sec(0));
    e.receive("eth0", frame_from("02:00:00:00:02:00"), sec(0));
    EXPECT_EQ(emission_times(e, sec(62)), secs({0, 1, 2, 62}));
}

TEST(LldpSchedule, NewNeighborStartsFastStartWhenIdle)
{
    LldpEngine e(mib(), {validation_agent()});
    e.port_up("eth0", sec(0));
    drive(e, sec(10));
    e.receive("eth0", frame_from("02:00:00:00:03:00"), sec(10));
    EXPECT_EQ(emission_times(e, sec(72)), secs({10, 11, 12, 72}));
}

TEST(LldpSchedule, NewNeighborTriggerCanBeDisabled)
{
    auto a = validation_agent();
    a.fast_start_on_new_neighbor = false;
    LldpEngine e(mib(), {a});
    e.port_up("eth0", sec(0));
    drive(e, sec(10));
    e.receive("eth0", frame_from("02:00:00:00:03:00"), sec(10));
    EXPECT_EQ(emission_times(e, sec(62)), secs({62}));
}

TEST(LldpSchedule, LocalChangeSendsImmediately)
{
    LldpEngine e(mib(), {validation_agent()});
    e.port_up("eth0", sec(0));
    drive(e, sec(99));
    e.local_change(sec(100));
    EXPECT_EQ(emission_times(e, sec(162)), secs({100, 101, 102, 162}));
}

TEST(LldpSchedule, ChangeWithoutCreditWaitsForNextSecond)
{
    auto a = validation_agent();
    a.tx_credit_max = 1;
    LldpEngine e(mib(), {a});
    e.port_up("eth0", sec(0));
    EXPECT_EQ(e.poll(sec(0)).size(), 1u);
    e.local_change(SimTime::millis(200));
    EXPECT_TRUE(e.poll(SimTime::millis(200)).empty());
    EXPECT_EQ(e.next_deadline(), sec(1));
    EXPECT_EQ(e.poll(sec(1)).size(), 1u);
}

TEST(LldpSchedule, RapidChangesCappedByCredit)
{
    LldpEngine e(mib(), {validation_agent()});
    e.port_up("eth0", SimTime::millis(100));
    std::size_t frames = 0;
    for (int i = 0; i < 7; ++i) {
        e.local_change(SimTime::millis(100));
        frames += e.poll(SimTime::millis(100)).size();
    }
    EXPECT_EQ(frames, 5u);
}

TEST(LldpSchedule, RxOnlyDeviceNeverTransmits)
{
    auto a = validation_agent();
    a.admin_status = LldpAdminStatus::rx_only;
    LldpEngine e(mib(), {a});
    e.port_up("eth0", sec(0));
    e.local_change(sec(5));
    EXPECT_TRUE(drive(e, sec(300)).empty());
}

TEST(LldpAdmin, DisablingSendsShutdownFrame)
{
    LldpEngine e(mib(), {validation_agent()});
    e.port_up("eth0", sec(0));
    drive(e, sec(10));
    e.set_admin_status("eth0", LldpAdminStatus::rx_only, sec(10));
    auto out = e.poll(sec(10));
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0].frame.ttl, 0);
    EXPECT_TRUE(drive(e, sec(300)).empty());
}

TEST(LldpAdmin, ShutdownBypassesCredit)
{
    auto a = validation_agent();
    a.tx_credit_max = 1;
    LldpEngine e(mib(), {a});
    e.port_up("eth0", sec(0));
    e.poll(sec(0));
    e.set_admin_status("eth0", LldpAdminStatus::disabled, sec(0));
    EXPECT_EQ(e.poll(sec(0)).size(), 1u);
}

TEST(LldpAdmin, DisablingReceivePurgesEntries)
{
    LldpEngine e(mib(), {validation_agent()});
    e.receive("eth0", frame_from("02:00:00:00:02:00"), sec(0));
    e.set_admin_status("eth0", LldpAdminStatus::tx_only, sec(1));
    EXPECT_TRUE(e.neighbors().empty());
}

TEST(LldpRemote, LearnAndExpire)
{
    LldpEngine e(mib(), {validation_agent()});
    e.receive("eth0", frame_from("02:00:00:00:02:00"), sec(0));
    ASSERT_EQ(e.neighbors().size(), 1u);
    EXPECT_EQ(e.neighbors()[0].expires_at, sec(180));
    EXPECT_EQ(e.neighbors()[0].system_name, "R2");
    e.poll(sec(179));
    EXPECT_EQ(e.neighbors().size(), 1u);
    e.poll(sec(180));
    EXPECT_TRUE(e.neighbors().empty());
    EXPECT_EQ(e.counters("eth0").ageouts, 1u);
}

TEST(LldpRemote, ShutdownRemovesEntry)
{
    LldpEngine e(mib(), {validation_agent()});
    e.receive("eth0", frame_from("02:00:00:00:02:00"), sec(0));
    e.receive("eth0", frame_from("02:00:00:00:02:00", 0), sec(3));
    EXPECT_TRUE(e.neighbors().empty());
    EXPECT_EQ(e.counters("eth0").ageouts, 0u);
}

TEST(LldpRemote, DisabledAgentDiscards)
{
    auto a = validation_agent();
    a.admin_status = LldpAdminStatus::disabled;
    LldpEngine e(mib(), {a});
    e.receive("eth0", frame_from("02:00:00:00:02:00"), sec(0));
    EXPECT_TRUE(e.neighbors().empty());
    EXPECT_EQ(e.counters("eth0").frames_discarded, 1u);
}

TEST(LldpRemote, DecodeErrorsCounted)
{
    LldpEngine e(mib(), {agent()});
    e.receive_payload("eth0", Bytes{0x04, 0x02, 0x05, 'x'}, sec(0));
    EXPECT_EQ(e.counters("eth0").frames_in_errors, 1u);
}

TEST(LldpRemote, UnknownTlvsCounted)
{
    LldpEngine e(mib(), {agent()});
    auto f = frame_from("02:00:00:00:02:00");
    f.optional_tlvs.push_back(LldpTlv::unknown(127, {0x00, 0x12, 0x0f, 0x01}));
    e.receive("eth0", f, sec(0));
    EXPECT_EQ(e.counters("eth0").tlvs_unrecognized, 1u);
}

TEST(LldpCounters, FreshAndAfterReceive)
{
    LldpEngine e(mib(), {agent()});
    EXPECT_EQ(e.counters("eth0"), LldpCounters{});
    e.receive("eth0", frame_from("02:00:00:00:02:00"), sec(0));
    EXPECT_EQ(e.counters("eth0").frames_in, 1u);
    try {
        e.counters("eth9");
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.code(), Errc::unknown_port);
    }
}

TEST(LldpDump, Format)
{
    LldpEngine e(mib(), {validation_agent()});
    EXPECT_EQ(e.dump_neighbors(sec(0)), "Device ID           Local Intf     Hold-time  Capability      Port ID\n");
    e.receive("eth0", frame_from("02:00:00:00:02:00"), sec(62));
    EXPECT_EQ(e.dump_neighbors(sec(100)),
              "Device ID           Local Intf     Hold-time  Capability      Port ID\n"
              "R2                  eth0           142        R               eth0\n");
}

TEST(LldpProperties, CreditRateLimit)
{
    // Random local-change bursts; count frames in every 1 s and 60 s window.
    support::Gen g(77);
    for (int round = 0; round < 20; ++round) {
        LldpEngine e(mib(), {validation_agent()});
        e.port_up("eth0", sec(0));
        std::vector<SimTime> sent;
        for (std::int64_t ms = 0; ms < 120'000; ms += 50) {
            auto now = SimTime::millis(ms);
            if (g.below(30) == 0)
                e.local_change(now);
            for (auto& em : e.poll(now)) {
                ASSERT_EQ(em.frame.ttl, 180);
                ASSERT_NO_THROW(decode_lldp(encode_lldp(em.frame)));
                sent.push_back(now);
            }
        }
        for (std::size_t i = 0; i < sent.size(); ++i) {
            std::size_t in_second = 0;
            std::size_t in_minute = 0;
            for (std::size_t j = i; j < sent.size(); ++j) {
                in_second += sent[j] < sent[i] + sec(1);
                in_minute += sent[j] < sent[i] + sec(60);
            }
            ASSERT_LE(in_second, 5u + 1u);
            ASSERT_LE(in_minute, 60u + 5u);
        }
    }
}

TEST(LldpProperties, MatchesCdpUnderValidationConfig)
{
    LldpEngine e(mib(), {validation_agent()});
    e.port_up("eth0", sec(0));
    drive(e, sec(49));
    e.port_down("eth0", sec(50));
    e.port_up("eth0", sec(200));
    EXPECT_EQ(emission_times(e, sec(400)), secs({200, 201, 202, 262, 322, 382}));
}

TEST(LldpProperties, CountersNeverDecrease)
{
    support::Gen g(3);
    LldpEngine e(mib(), {validation_agent()});
    e.port_up("eth0", sec(0));
    LldpCounters last;
    for (int t = 0; t < 1000; ++t) {
        if (g.below(10) == 0)
            e.receive("eth0", frame_from("02:00:00:00:02:00", static_cast<std::uint16_t>(g.below(100))), sec(t));
        if (g.below(50) == 0)
            e.receive_payload("eth0", g.bytes(20), sec(t));
        e.poll(sec(t));
        auto c = e.counters("eth0");
        ASSERT_GE(c.frames_out, last.frames_out);
        ASSERT_GE(c.frames_in, last.frames_in);
        ASSERT_GE(c.frames_in_errors, last.frames_in_errors);
        ASSERT_GE(c.ageouts, last.ageouts);
        last = c;
    }
}
