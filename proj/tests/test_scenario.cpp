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
#include "l2disc/scenario.hpp"

#include <gtest/gtest.h>

#include <optional>
#include <string>

using namespace l2disc;

namespace {

std::string scenario_path(const char* name)
{
    return std::string(L2DISC_SCENARIO_DIR) + "/" + name;
}

std::optional<Errc> error_of(std::string_view xml, int* line = nullptr)
{
    try {
        parse_scenario(xml);
    } catch (const Error& e) {
        if (line)
            *line = e.line();
        return e.code();
    }
    return std::nullopt;
}

constexpr const char* two_routers = R"(<scenario schema="1">
  <node id="A" kind="router"><interface name="eth0"/><cdp/><lldp/></node>
  <node id="B" kind="router"><interface name="eth0"/></node>
  <link a="A:eth0" b="B:eth0"/>
</scenario>)";

} // namespace

TEST(ScenarioParse, ShippedTopology)
{
    auto s = load_scenario(scenario_path("figure4.xml"));
    EXPECT_EQ(s.nodes.size(), 6u);
    EXPECT_EQ(s.links.size(), 5u);
    EXPECT_EQ(s.seed, 1u);
    EXPECT_EQ(s.until, SimTime::seconds(300));
    ASSERT_EQ(s.timeline.size(), 5u);
    EXPECT_EQ(s.timeline[0].at, SimTime::seconds(50));
    EXPECT_EQ(s.timeline[0].action, TimelineAction::link_down);
    EXPECT_EQ(s.timeline[0].link->to_string(), "R1:eth0");
    EXPECT_EQ(s.timeline[4].at, SimTime::seconds(200));
    EXPECT_EQ(s.timeline[4].action, TimelineAction::link_up);

    const auto* r1 = s.find_node("R1");
    ASSERT_NE(r1, nullptr);
    ASSERT_TRUE(r1->cdp && r1->lldp);
    EXPECT_EQ(r1->cdp->holdtime, 180);
    EXPECT_EQ(r1->lldp->tx_interval, 60);
    EXPECT_EQ(r1->lldp->tx_hold, 3);
    EXPECT_EQ(r1->cdp->device_id, "R1");
    EXPECT_EQ(r1->lldp->management_address, Ipv4Address::parse("10.0.12.1"));
    EXPECT_FALSE(s.find_node("Host1")->cdp);
    EXPECT_EQ(s.find_node("Host1")->lldp->admin_status, LldpAdminStatus::rx_only);
    EXPECT_EQ(s.find_node("S1")->kind, NodeKind::ethernet_switch);
}

TEST(ScenarioParse, AllShippedScenariosLoad)
{
    for (auto name : {"figure4.xml", "figure4-initial.xml", "hub-spoke.xml"})
        EXPECT_NO_THROW(load_scenario(scenario_path(name))) << name;
}

TEST(ScenarioParse, Defaults)
{
    auto s = parse_scenario(two_routers);
    EXPECT_EQ(s.until, SimTime::seconds(300));
    EXPECT_EQ(s.seed, 0u);
    ASSERT_EQ(s.nodes.size(), 2u);
    EXPECT_EQ(s.nodes[0].mac.to_string(), "02:00:00:00:01:00");
    EXPECT_EQ(s.nodes[1].interfaces[0].mac.to_string(), "02:00:00:00:02:01");
    ASSERT_TRUE(s.nodes[0].cdp && s.nodes[0].lldp);
    EXPECT_FALSE(s.nodes[1].cdp);
    EXPECT_FALSE(s.nodes[1].lldp);
    EXPECT_EQ(s.nodes[0].cdp->holdtime.value_or(180), 180);
    EXPECT_EQ(s.nodes[0].lldp->tx_interval, 30);
    EXPECT_EQ(s.nodes[0].lldp->tx_hold, 4);
    EXPECT_EQ(s.nodes[0].cdp->update_interval, 60);
    EXPECT_EQ(s.links[0].delay, SimTime{});
}

TEST(ScenarioParse, EmptyScenarioIsValid)
{
    auto s = parse_scenario(R"(<scenario schema="1"/>)");
    EXPECT_TRUE(s.nodes.empty());
    EXPECT_TRUE(s.links.empty());
    EXPECT_TRUE(s.timeline.empty());
}

TEST(ScenarioParse, TimelineSortedStable)
{
    auto s = parse_scenario(R"(<scenario schema="1">
  <node id="A"><interface name="eth0"/></node>
  <node id="B"><interface name="eth0"/></node>
  <link a="A:eth0" b="B:eth0"/>
  <event at="20" action="dump-tables"/>
  <event at="10" action="link-down" link="B:eth0"/>
  <event at="20" action="link-up" link="A:eth0"/>
  <event at="10.5" action="local-mib-change" node="A"/>
</scenario>)");
    ASSERT_EQ(s.timeline.size(), 4u);
    EXPECT_EQ(s.timeline[0].action, TimelineAction::link_down);
    EXPECT_EQ(s.timeline[1].at, SimTime::millis(10500));
    EXPECT_EQ(s.timeline[2].action, TimelineAction::dump_tables);
    EXPECT_EQ(s.timeline[3].action, TimelineAction::link_up);
}

TEST(ScenarioErrors, MalformedXmlReportsLine)
{
    int line = 0;
    EXPECT_EQ(error_of("<scenario schema=\"1\">\n<node id=\"A\">\n</scenario>", &line), Errc::parse_error);
    EXPECT_GT(line, 0);
    EXPECT_EQ(error_of(""), Errc::parse_error);
}

TEST(ScenarioErrors, SchemaViolations)
{
    EXPECT_EQ(error_of(R"(<!-- nothing -->)"), Errc::schema_error);
    EXPECT_EQ(error_of(R"(<scenario schema="2"/>)"), Errc::schema_error);
    EXPECT_EQ(error_of(R"(<topology schema="1"/>)"), Errc::schema_error);
    EXPECT_EQ(error_of(R"(<scenario schema="1" colour="red"/>)"), Errc::schema_error);
    EXPECT_EQ(error_of(R"(<scenario schema="1"><widget/></scenario>)"), Errc::schema_error);
    EXPECT_EQ(error_of(R"(<scenario schema="1" until="-5"/>)"), Errc::schema_error);
    EXPECT_EQ(error_of(R"(<scenario schema="1" until="soon"/>)"), Errc::schema_error);
    EXPECT_EQ(error_of(R"(<scenario schema="1"><node id="A" kind="toaster"/></scenario>)"), Errc::schema_error);
    EXPECT_EQ(error_of(R"(<scenario schema="1"><node id="A"/><node id="A"/></scenario>)"), Errc::schema_error);
    EXPECT_EQ(error_of(R"(<scenario schema="1"><node id="A"><interface name="e" address="10.0.0.300/24"/></node></scenario>)"),
              Errc::schema_error);
    EXPECT_EQ(error_of(R"(<scenario schema="1"><node id="A"><interface name="e"/><cdp holdtime="256"/></node></scenario>)"),
              Errc::schema_error);
    EXPECT_EQ(error_of(R"(<scenario schema="1"><node id="A"><interface name="e"/><lldp tx-fast-init="9"/></node></scenario>)"),
              Errc::schema_error);
    EXPECT_EQ(error_of(R"(<scenario schema="1"><node id="A"><interface name="e"/><lldp tx-interval="60" ttl="100"/></node></scenario>)"),
              Errc::schema_error);
}

TEST(ScenarioErrors, UndeclaredEndpoint)
{
    EXPECT_EQ(error_of(R"(<scenario schema="1">
  <node id="A"><interface name="eth0"/></node>
  <link a="A:eth0" b="Ghost:eth0"/>
</scenario>)"),
              Errc::schema_error);
    EXPECT_EQ(error_of(R"(<scenario schema="1">
  <node id="A"><interface name="eth0"/></node>
  <node id="B"><interface name="eth0"/></node>
  <link a="A:eth0" b="B:eth9"/>
</scenario>)"),
              Errc::schema_error);
}

TEST(ScenarioErrors, EndpointLinkedTwice)
{
    EXPECT_EQ(error_of(R"(<scenario schema="1">
  <node id="A"><interface name="eth0"/></node>
  <node id="B"><interface name="eth0"/><interface name="eth1"/></node>
  <link a="A:eth0" b="B:eth0"/>
  <link a="A:eth0" b="B:eth1"/>
</scenario>)"),
              Errc::schema_error);
}

TEST(ScenarioErrors, EventConsistency)
{
    auto with_event = [](const std::string& ev) {
        return std::string(R"(<scenario schema="1">
  <node id="A"><interface name="eth0"/></node>
  <node id="B"><interface name="eth0"/></node>
  <link a="A:eth0" b="B:eth0"/>)") + ev + "</scenario>";
    };
    EXPECT_EQ(error_of(with_event(R"(<event at="5" action="link-down"/>)")), Errc::schema_error);
    EXPECT_EQ(error_of(with_event(R"(<event at="5" action="link-down" link="C:eth0"/>)")), Errc::schema_error);
    EXPECT_EQ(error_of(with_event(R"(<event at="5" action="local-mib-change"/>)")), Errc::schema_error);
    EXPECT_EQ(error_of(with_event(R"(<event at="5" action="explode"/>)")), Errc::schema_error);
    EXPECT_EQ(error_of(with_event(R"(<event at="-1" action="dump-tables"/>)")), Errc::schema_error);
    EXPECT_EQ(error_of(with_event(R"(<event at="5" action="link-up" link="A:eth0"/>)")), std::nullopt);
}

TEST(ScenarioErrors, MissingFile)
{
    try {
        load_scenario("/nonexistent/dir/none.xml");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::io_error);
    }
}

TEST(ScenarioRoundTrip, SerializeThenParse)
{
    for (auto name : {"figure4.xml", "figure4-initial.xml", "hub-spoke.xml"}) {
        auto s = load_scenario(scenario_path(name));
        auto text = serialize_scenario(s);
        auto again = parse_scenario(text);
        EXPECT_EQ(again, s) << name;
        EXPECT_EQ(serialize_scenario(again), text) << name;
    }
}

TEST(ScenarioRoundTrip, EveryOptionSurvives)
{
    auto s = parse_scenario(R"(<scenario schema="1" name="full" seed="99" until="12.5">
  <node id="A" kind="switch" mac="0a:0b:0c:0d:0e:0f">
    <interface name="gi0/1" mac="0a:0b:0c:0d:0e:10" address="172.16.0.1/16" description="uplink"
               duplex="half" native-vlan="12" lldp-admin="rxOnly" cdp="false"/>
    <interface name="gi0/2"/>
    <cdp device-id="SW-A" platform="p" software-version="s" location="rack 4" vtp-domain="lab"
         capabilities="switch,igmp" update-interval="5" holdtime="15" jitter="0.5"/>
    <lldp system-name="sw-a" system-description="desc" capabilities="bridge,router"
          enabled-capabilities="bridge" management-address="172.16.0.1" tx-interval="10" tx-hold="2"
          fast-tx="2" tx-fast-init="8" tx-credit-max="9" destination="nearest-customer-bridge"
          fast-start-on-new-neighbor="false" jitter="0.25"/>
  </node>
  <node id="B"><interface name="eth0"/></node>
  <link a="A:gi0/2" b="B:eth0" delay="0.005" state="down"/>
  <event at="3" action="link-up" link="B:eth0"/>
  <event at="4" action="local-mib-change" node="A"/>
  <output pcap="out.pcap" csv="out.csv" dumps="out.txt"/>
</scenario>)");
    const auto& a = s.nodes[0];
    EXPECT_EQ(a.interfaces[0].native_vlan, 12);
    EXPECT_FALSE(a.interfaces[0].cdp);
    EXPECT_EQ(a.cdp->jitter, SimTime::millis(500));
    EXPECT_EQ(a.lldp->destination, mac::lldp_nearest_customer_bridge);
    EXPECT_EQ(s.links[0].initial, LinkState::down);
    EXPECT_EQ(s.links[0].delay, SimTime::millis(5));
    EXPECT_EQ(s.outputs.csv, "out.csv");
    EXPECT_EQ(parse_scenario(serialize_scenario(s)), s);
}
