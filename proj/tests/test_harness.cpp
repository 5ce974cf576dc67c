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

#include "l2disc/ethernet.hpp"
#include "l2disc/harness.hpp"
#include "l2disc/scenario.hpp"

#include "support/drive.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

using namespace l2disc;
using support::sec;
using support::secs;

namespace {

Scenario shipped(const char* name)
{
    return load_scenario(std::string(L2DISC_SCENARIO_DIR) + "/" + name);
}

std::string golden(const char* name)
{
    std::ifstream in(std::string(L2DISC_GOLDEN_DIR) + "/" + name, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<SimTime> times(const MessageLog& log, Protocol p, const std::string& from, const std::string& to)
{
    std::vector<SimTime> out;
    for (const auto& r : log)
        if (r.protocol == p && r.src_node == from && r.dst_node == to)
            out.push_back(r.timestamp);
    return out;
}

} // namespace

TEST(Harness, InitialDiscoveryRows)
{
    auto a = run_scenario(shipped("figure4-initial.xml"));
    for (auto p : {Protocol::cdp, Protocol::lldp}) {
        EXPECT_EQ(times(a.log, p, "R1", "R2"), secs({0, 1, 2, 62}));
        EXPECT_EQ(times(a.log, p, "R2", "R1"), secs({0, 1, 2, 62}));
        EXPECT_EQ(times(a.log, p, "R2", "R3"), secs({0, 1, 2, 62}));
    }
    EXPECT_EQ(times(a.log, Protocol::lldp, "Host1", "S1"), secs({}));
    EXPECT_EQ(times(a.log, Protocol::cdp, "S1", "Host1"), secs({0, 1, 2, 62}));
}

TEST(Harness, RestartRows)
{
    auto a = run_scenario(shipped("figure4.xml"));
    for (auto p : {Protocol::cdp, Protocol::lldp})
        for (auto [x, y] : {std::pair{"R1", "R2"}, std::pair{"R2", "R1"}})
            EXPECT_EQ(times(a.log, p, x, y), secs({0, 1, 2, 200, 201, 202, 262}));
}

TEST(Harness, DumpsAroundExpiry)
{
    auto a = run_scenario(shipped("figure4.xml"));
    ASSERT_EQ(a.dumps.size(), 4u);
    EXPECT_EQ(a.dumps[0].at, sec(100));
    EXPECT_EQ(a.dumps[3].label, "end");
    EXPECT_EQ(a.dumps[3].at, sec(300));
    auto section = [](const std::string& text, const std::string& head) {
        auto from = text.find(head);
        return from == std::string::npos ? std::string() : text.substr(from, text.find("\n\n", from) - from);
    };
    auto r1_at_181 = section(a.dumps[1].text, "R1# show cdp neighbors");
    EXPECT_NE(r1_at_181.find("R2               eth0              1 "), std::string::npos) << r1_at_181;
    auto r1_at_182 = section(a.dumps[2].text, "R1# show cdp neighbors");
    EXPECT_EQ(r1_at_182.find("R2"), std::string::npos) << r1_at_182;
    EXPECT_EQ(section(a.dumps[2].text, "R1# show lldp neighbors").find("R2"), std::string::npos);
    EXPECT_EQ(section(a.dumps[2].text, "R2# show cdp neighbors").find("R1"), std::string::npos);
    EXPECT_EQ(section(a.dumps[2].text, "R2# show lldp neighbors").find("R1"), std::string::npos);
}

TEST(Harness, GoldenDump)
{
    auto a = run_scenario(shipped("figure4.xml"));
    EXPECT_EQ(a.dumps.at(0).text, golden("figure4_t100.txt"));
}

TEST(Harness, AllProtocolsDisabled)
{
    auto s = parse_scenario(R"(<scenario schema="1" until="600">
  <node id="A"><interface name="eth0"/></node>
  <node id="B"><interface name="eth0"/></node>
  <link a="A:eth0" b="B:eth0"/>
</scenario>)");
    auto a = run_scenario(s);
    EXPECT_TRUE(a.log.empty());
    EXPECT_TRUE(a.capture.empty());
    EXPECT_EQ(a.dumps.size(), 1u);
}

TEST(Harness, RunOptionsOverride)
{
    auto a = run_scenario(shipped("figure4.xml"), {sec(70), std::nullopt, std::nullopt});
    EXPECT_EQ(a.until, sec(70));
    EXPECT_EQ(times(a.log, Protocol::cdp, "R1", "R2"), secs({0, 1, 2}));
    EXPECT_EQ(times(a.log, Protocol::cdp, "R2", "R3"), secs({0, 1, 2, 62}));
}

TEST(Harness, CaptureMatchesLog)
{
    auto a = run_scenario(shipped("figure4.xml"));
    ASSERT_EQ(a.capture.size(), a.log.size());
    auto records = a.pcap_records();
    ASSERT_EQ(records.size(), a.capture.size());
    const std::set<MacAddress> multicast{mac::cdp_multicast, mac::lldp_nearest_bridge,
                                         mac::lldp_nearest_non_tpmr_bridge, mac::lldp_nearest_customer_bridge};
    for (std::size_t i = 0; i < a.capture.size(); ++i) {
        EXPECT_EQ(a.capture[i].at, a.log[i].timestamp);
        EXPECT_EQ(a.capture[i].from.node, a.log[i].src_node);
        EXPECT_EQ(a.capture[i].to.node, a.log[i].dst_node);
        auto f = parse_ethernet(a.capture[i].frame);
        EXPECT_TRUE(multicast.count(f.dst));
        EXPECT_EQ(f.kind == FrameKind::cdp, a.log[i].protocol == Protocol::cdp);
        EXPECT_GE(a.capture[i].frame.size(), 60u);
    }
}

TEST(Harness, OdrLifecycle)
{
    auto a = run_scenario(shipped("hub-spoke.xml"));
    ASSERT_EQ(a.dumps.size(), 4u);
    EXPECT_NE(a.dumps[0].text.find("192.168.1.0/24 [160/1] via 10.1.1.2, eth0, valid"), std::string::npos);
    EXPECT_NE(a.dumps[0].text.find("0.0.0.0/0 [160/1] via 10.1.1.1, eth0, valid"), std::string::npos);
    EXPECT_NE(a.dumps[1].text.find("192.168.1.0/24 [160/1] via 10.1.1.2, eth0, holddown"), std::string::npos);
    EXPECT_EQ(a.dumps[2].text.find("192.168.1.0/24"), std::string::npos);
    EXPECT_NE(a.dumps[2].text.find("192.168.2.0/24 [160/1] via 10.1.2.2, eth1, valid"), std::string::npos);
    EXPECT_NE(a.dumps[3].text.find("192.168.11.0/24 [160/1] via 10.1.1.2, eth0, valid"), std::string::npos);
}

TEST(Harness, Deterministic)
{
    auto s = shipped("figure4.xml");
    RunOptions o{std::nullopt, 7, SimTime::millis(250)};
    auto a = run_scenario(s, o);
    auto b = run_scenario(s, o);
    EXPECT_EQ(a.log, b.log);
    EXPECT_EQ(a.dump_text(), b.dump_text());
    EXPECT_EQ(a.pcap_records(), b.pcap_records());
}

TEST(Harness, SeedChangesJitteredTimes)
{
    auto s = shipped("figure4.xml");
    auto a = run_scenario(s, {std::nullopt, 1, SimTime::millis(500)});
    auto b = run_scenario(s, {std::nullopt, 2, SimTime::millis(500)});
    EXPECT_NE(a.log, b.log);
    for (const auto* run : {&a, &b}) {
        auto t = times(run->log, Protocol::cdp, "R2", "R3");
        ASSERT_GE(t.size(), 4u);
        EXPECT_EQ(std::vector<SimTime>(t.begin(), t.begin() + 3), secs({0, 1, 2}));
        EXPECT_GE(t[3], sec(62));
        EXPECT_LT(t[3], sec(62) + SimTime::millis(500));
    }
}

TEST(Harness, EngineSeedsDiffer)
{
    EXPECT_NE(engine_seed(1, "R1", Protocol::cdp), engine_seed(1, "R1", Protocol::lldp));
    EXPECT_NE(engine_seed(1, "R1", Protocol::cdp), engine_seed(1, "R2", Protocol::cdp));
    EXPECT_NE(engine_seed(1, "R1", Protocol::cdp), engine_seed(2, "R1", Protocol::cdp));
    EXPECT_EQ(engine_seed(9, "X", Protocol::lldp), engine_seed(9, "X", Protocol::lldp));
}
