// Copyright 2026 The storyeval Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pos_lexicon.h"

namespace storyeval::internal {

// Pronouns follow the Universal Dependencies convention (possessives
// included). Auxiliaries and modals count as OTHER, not VERB.
std::string_view EmbeddedPosLexicon() {
  static constexpr std::string_view kLexicon = R"(
PRON: i me my mine myself we us our ours ourselves you your yours yourself
PRON: yourselves he him his himself she her hers herself it its itself they
PRON: them their theirs themselves who whom whose whoever whatever what
PRON: someone everyone anyone noone somebody everybody anybody nobody
PRON: something everything anything nothing
PRON: i'm i've i'll i'd we're we've we'll we'd you're you've you'll you'd
PRON: he's he'll he'd she's she'll she'd it's it'll they're they've they'll
PRON: they'd
OTHER: the a an this that these those some any every each all both no
OTHER: another such which either neither
OTHER: in on at to for with from of by about over under after before into
OTHER: onto through during around near across behind beside besides between
OTHER: up down out off above below along among toward towards inside outside
OTHER: upon within without past since until till via against except like
OTHER: and or but so because if while when where although though than as
OTHER: then yet nor whether once unless how why
OTHER: not never always often still even again back here there now soon
OTHER: already finally later ago away together very much more most only
OTHER: well quite almost today tonight tomorrow yesterday also too just
OTHER: really maybe perhaps ever sometimes everywhere somewhere anywhere
OTHER: instead else rather enough pretty so ahead apart forward
OTHER: be am is are was were been being do does did can could will would
OTHER: shall should may might must ought
OTHER: don't doesn't didn't can't couldn't won't wouldn't isn't aren't wasn't
OTHER: weren't hasn't haven't hadn't shouldn't mustn't that's there's here's
OTHER: what's who's where's
OTHER: oh wow yes yeah hey hello hi ok okay please thanks
OTHER: one two three four five six seven eight nine ten eleven twelve twenty
OTHER: thirty forty fifty hundred thousand million
VERB: go goes went gone going get gets got gotten take took taken make made
VERB: see saw seen come came have has had say said know knew known think
VERB: thought look want give gave given find found tell told feel felt leave
VERB: put bring brought begin began begun keep kept hold held stand stood sit
VERB: sat run runs ran eat ate eaten drink drank drunk buy bought meet met
VERB: play enjoy love decide start finish visit arrive walk watch wait
VERB: celebrate gather dance sing sang sung swim swam drive drove driven ride
VERB: rode fly flew flown win won lose lost fall fell fallen become became
VERB: grow grew grown build built wear wore worn read write wrote written
VERB: spend spent show shown try need help learn share open close stop pose
VERB: smile laugh cheer hug talk speak spoke spoken hear heard climb explore
VERB: hike relax sleep slept wake woke throw threw thrown catch caught cut
VERB: set let let's seem turn move live believe happen carry pick stay reach
VERB: check hang hung join plan prepare cook bake serve took sent send lead
VERB: led leave left pay paid sell sold teach taught fight fought feed fed
VERB: bite bit hide hid shake shook steal stole swing swung broke break
VERB: broken choose chose chosen forget forgot forgotten rise rose risen
VERB: shine shone shoot shot sink sank spin spun tear tore wish hope
VERB: remember ask answer call invite greet wave kiss marry dress decorate
VERB: admire capture graduate perform practice compete attend participate
VERB: receive remember seemed appear arrived include continue create
VERB: done doing
ADJ: good great nice happy fun big small little large old new young long
ADJ: short high low hot cold warm cool best better worse worst bad sad fine
ADJ: fast slow lovely amazing interesting exciting boring stunning relaxing
ADJ: huge tiny full empty whole entire last next first second third final
ADJ: other own same different special favorite favourite sure ready excited
ADJ: tired proud glad sweet cute funny crazy silly lucky quiet loud real true
ADJ: free clear early late easy hard heavy strong fresh local tall wide deep
ADJ: rich poor main many few busy clean dirty dark bright sunny rainy snowy
ADJ: cloudy windy perfect wonderful awesome fantastic incredible delicious
ADJ: red blue green white black yellow pink purple brown gray grey golden
ADJ: silver orange colorful beautiful friendly lonely lively ugly scary
ADJ: interested bored surprised amazed pleased scared worried crowded
ADJ: married relaxed delighted talented annual historic famous huge massive
ADJ: gorgeous elegant fancy cozy calm wild safe dry wet soft smooth sharp
ADJ: able unable ready hungry thirsty sick healthy alive dead asleep awake
ADJ: nervous anxious serious curious glorious certain important possible
ADJ: impossible whole overall several various previous recent modern
ADJ: ancient beloved entire little young older younger oldest youngest
ADJ: bigger biggest smaller smallest larger largest longer longest happier
ADJ: happiest nicer nicest greater greatest higher highest
NOUN: family thing things morning mornings evening evenings wedding weddings
NOUN: building buildings ceiling painting paintings king ring spring string
NOUN: bed sled shed feed reed seed speed weed
NOUN: bus class glass grass dress boss gas kiss mess guess
NOUN: festival animal hospital music picnic fly lily belly jelly rally
NOUN: day days time times people friend friends party parties city
NOUN: trip beach park picture pictures photo photos home
NOUN: interest forest guest test rest west chest
)";
  return kLexicon;
}

}  // namespace storyeval::internal
