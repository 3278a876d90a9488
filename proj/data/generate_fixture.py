#!/usr/bin/env python3
# Copyright 2026 The reslve Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the fixture corpus under data/. Output is deterministic."""

import json
import random
from pathlib import Path
from urllib.parse import quote

HERE = Path(__file__).resolve().parent
ROOT = "Category:Main_topic_classifications"

# category -> parents
CATEGORIES = {
    ROOT: [],
    "Category:Culture": [ROOT],
    "Category:Entertainment": ["Category:Culture"],
    "Category:Television": ["Category:Entertainment"],
    "Category:Television_series": ["Category:Television"],
    "Category:Television_seasons": ["Category:Television"],
    "Category:American_television_series": ["Category:Television_series"],
    "Category:British_television_series": ["Category:Television_series"],
    "Category:Workplace_comedy": ["Category:Television_series", "Category:Comedy"],
    "Category:NBC_network_shows": ["Category:American_television_series"],
    "Category:BBC_television_sitcoms": ["Category:British_television_series"],
    "Category:The_Office_(U.S._TV_series)": ["Category:NBC_network_shows"],
    "Category:The_Office_(U.S._TV_series)_seasons": [
        "Category:The_Office_(U.S._TV_series)", "Category:Television_seasons"],
    "Category:Comedy": ["Category:Entertainment"],
    "Category:British_comedy_troupes": ["Category:Comedy"],
    "Category:Music": ["Category:Culture"],
    "Category:Rock_music": ["Category:Music"],
    "Category:American_rock_music_groups": ["Category:Rock_music"],
    "Category:Grunge_musical_groups": ["Category:American_rock_music_groups"],
    "Category:Musical_instruments": ["Category:Music"],
    "Category:Singers": ["Category:Music"],
    "Category:Theatre": ["Category:Culture"],
    "Category:Musicals": ["Category:Music", "Category:Theatre"],
    "Category:Record_labels": ["Category:Music", "Category:Companies"],
    "Category:Science": [ROOT],
    "Category:Astronomy": ["Category:Science"],
    "Category:Planets_of_the_Solar_System": ["Category:Astronomy"],
    "Category:Solar_eclipses": ["Category:Astronomy"],
    "Category:Chemistry": ["Category:Science"],
    "Category:Chemical_elements": ["Category:Chemistry"],
    "Category:Physics": ["Category:Science"],
    "Category:Thermodynamics": ["Category:Physics"],
    # Mathematics and Computer_science form a cycle.
    "Category:Mathematics": ["Category:Science", "Category:Computer_science"],
    "Category:Technology": [ROOT],
    "Category:Computing": ["Category:Technology"],
    "Category:Computer_science": ["Category:Computing", "Category:Mathematics"],
    "Category:Programming_languages": ["Category:Computer_science"],
    "Category:Programming_tools": ["Category:Computing"],
    "Category:Free_software": ["Category:Computing"],
    "Category:Integrated_development_environments": [
        "Category:Free_software", "Category:Programming_tools"],
    "Category:Big_data": ["Category:Computing"],
    "Category:Vehicles": ["Category:Technology"],
    "Category:Economy": [ROOT],
    "Category:Companies": ["Category:Economy"],
    "Category:Workplaces": ["Category:Economy"],
    "Category:Technology_companies": ["Category:Technology", "Category:Companies"],
    "Category:Car_manufacturers": ["Category:Companies", "Category:Vehicles"],
    "Category:Food": ["Category:Culture"],
    "Category:Fruits": ["Category:Food", "Category:Plants"],
    "Category:Coffee": ["Category:Food"],
    "Category:Confectionery_brands": ["Category:Companies", "Category:Food"],
    "Category:Nature": [ROOT],
    "Category:Animals": ["Category:Nature"],
    "Category:Plants": ["Category:Nature"],
    "Category:Gemstones": ["Category:Nature"],
    "Category:Birds": ["Category:Animals"],
    "Category:Birds_of_North_America": ["Category:Birds"],
    "Category:Felines": ["Category:Animals"],
    "Category:Snakes": ["Category:Animals"],
    "Category:Fish": ["Category:Animals"],
    "Category:Freshwater_fish": ["Category:Fish"],
    "Category:Sports": [ROOT],
    "Category:Basketball": ["Category:Sports"],
    "Category:National_Basketball_Association_teams": ["Category:Basketball"],
    "Category:Baseball": ["Category:Sports"],
    "Category:Major_League_Baseball_teams": ["Category:Baseball"],
    "Category:American_football": ["Category:Sports"],
    "Category:National_Football_League_teams": ["Category:American_football"],
    "Category:Geography": [ROOT],
    "Category:Cities_in_the_United_States": ["Category:Geography"],
    "Category:Islands_of_Indonesia": ["Category:Geography"],
    "Category:Rivers_of_South_America": ["Category:Geography"],
    "Category:Religion": ["Category:Culture"],
    "Category:Buddhism": ["Category:Religion"],
    "Category:Mythology": ["Category:Religion", "Category:Culture"],
    "Category:Greek_mythology": ["Category:Mythology"],
    "Category:Catholic_Church": ["Category:Religion"],
}

DOMAINS = {
    "tv": "television episode season sitcom network broadcast series cast showrunner "
          "premiere finale ratings mockumentary comedy character writers viewers primetime "
          "actor scripted pilot syndication emmy",
    "programming": "programming language compiler interpreter syntax source code library "
                   "developer software runtime function object typing module repository "
                   "framework bytecode debugging release",
    "astronomy": "planet orbit solar telescope moon star sky astronomer gravity crater "
                 "atmosphere observatory spacecraft axis surface rings",
    "chemistry": "element atomic metal isotope compound periodic chemical liquid toxic laboratory",
    "sports": "team season playoffs arena coach championship conference roster franchise "
              "league players division stadium fans victory",
    "music": "band album guitar rock tour singer songs drummer record label concert lyrics "
             "stage vocalist studio",
    "animals": "species habitat wildlife predator prey forest feathers nest breeding "
               "conservation population native wetland scales",
    "geography": "city island river population capital region travel tourism coast "
                 "mountains climate province landmark",
    "food": "fruit recipe flavor sweet taste cooking dessert kitchen ingredient harvest "
            "roasted beans snack",
    "religion": "myth god goddess ancient greek legend temple worship deity belief "
                "monastery meditation church bishop",
    "economy": "business company market employees corporate trade headquarters products "
               "revenue brand",
    "vehicles": "automobile engine vehicles manufacturer models sedan",
}
FILLER = ("history early known people world years during became later often "
          "several many important notable").split()

# topic -> (categories, domain, specific keywords)
TOPICS = {
    # candidates
    "Office": (["Category:Workplaces"], "economy",
               "workplace desk employees building clerical administrative cubicle"),
    "The_Office_(U.S._TV_series)": (
        ["Category:The_Office_(U.S._TV_series)", "Category:NBC_network_shows",
         "Category:Workplace_comedy"], "tv",
        "nbc scranton dunder mifflin michael dwight pam jim andy american thursday"),
    "The_Office_(UK_TV_series)": (
        ["Category:BBC_television_sitcoms", "Category:Workplace_comedy"], "tv",
        "bbc slough wernham hogg brent gervais merchant british"),
    "Jaguar": (["Category:Felines"], "animals", "cat spotted rosettes jungle americas"),
    "Jaguar_Cars": (["Category:Car_manufacturers"], "vehicles",
                    "luxury british coventry sports cars"),
    "Jacksonville_Jaguars": (["Category:National_Football_League_teams"], "sports",
                             "nfl florida quarterback touchdown jacksonville"),
    "Python_(programming_language)": (["Category:Programming_languages"], "programming",
                                      "guido indentation scripting dynamic"),
    "Pythonidae": (["Category:Snakes"], "animals", "snake constrictor reptile eggs"),
    "Monty_Python": (["Category:British_comedy_troupes"], "tv",
                     "sketch cleese palin flying circus troupe"),
    "Apple": (["Category:Fruits"], "food", "orchard tree cider pie varieties"),
    "Apple_Inc.": (["Category:Technology_companies"], "economy",
                   "iphone mac cupertino jobs computers software"),
    "Apple_Records": (["Category:Record_labels"], "music", "beatles label london releases"),
    "Mercury_(planet)": (["Category:Planets_of_the_Solar_System"], "astronomy",
                         "innermost smallest messenger"),
    "Mercury_(element)": (["Category:Chemical_elements"], "chemistry",
                          "quicksilver thermometer"),
    "Freddie_Mercury": (["Category:Singers"], "music", "queen frontman vocalist rhapsody"),
    "Java_(programming_language)": (["Category:Programming_languages"], "programming",
                                    "sun oracle virtual machine classes"),
    "Java": (["Category:Islands_of_Indonesia"], "geography", "indonesia jakarta volcanoes"),
    "Java_coffee": (["Category:Coffee"], "food", "arabica brewed beans plantation"),
    "San_Francisco_Giants": (["Category:Major_League_Baseball_teams"], "sports",
                             "baseball mlb pitcher inning francisco"),
    "New_York_Giants": (["Category:National_Football_League_teams"], "sports",
                        "nfl quarterback touchdown york"),
    "Giant": (["Category:Greek_mythology"], "religion", "titans huge strength folklore"),
    "Bass_guitar": (["Category:Musical_instruments"], "music", "strings fender low rhythm"),
    "Bass_(fish)": (["Category:Freshwater_fish"], "animals", "angling lake perch fins"),
    "Chicago": (["Category:Cities_in_the_United_States"], "geography",
                "illinois michigan skyline windy"),
    "Chicago_(band)": (["Category:American_rock_music_groups"], "music",
                       "horns brass chicago saturday"),
    "Chicago_(musical)": (["Category:Musicals"], "music", "broadway jazz kander velma roxie"),
    "Nirvana_(band)": (["Category:Grunge_musical_groups"], "music",
                       "cobain seattle grunge nevermind"),
    "Nirvana": (["Category:Buddhism"], "religion", "enlightenment suffering liberation"),
    "Amazon_River": (["Category:Rivers_of_South_America"], "geography",
                     "brazil rainforest basin tributaries"),
    "Amazon_(company)": (["Category:Technology_companies"], "economy",
                         "bezos seattle retail cloud"),
    "Amazons": (["Category:Greek_mythology"], "religion", "warrior women hippolyta"),
    "Solar_eclipse": (["Category:Solar_eclipses"], "astronomy", "totality corona shadow"),
    "Eclipse_(software)": (["Category:Integrated_development_environments"], "programming",
                           "ide plugins workspace editor"),
    "Ruby_(programming_language)": (["Category:Programming_languages"], "programming",
                                    "matz rails gems"),
    "Ruby": (["Category:Gemstones"], "animals", "gemstone red corundum jewelry"),
    "Miami_Heat": (["Category:National_Basketball_Association_teams"], "sports",
                   "nba basketball miami"),
    "Heat": (["Category:Thermodynamics"], "chemistry", "energy temperature transfer"),
    "Houston_Rockets": (["Category:National_Basketball_Association_teams"], "sports",
                        "nba basketball houston"),
    "Rocket": (["Category:Vehicles"], "vehicles", "propellant thrust launch"),
    "Mars": (["Category:Planets_of_the_Solar_System"], "astronomy", "red rover olympus"),
    "Mars_(chocolate_bar)": (["Category:Confectionery_brands"], "food",
                             "caramel nougat chocolate bar"),
    "Bruno_Mars": (["Category:Singers"], "music", "pop singer songwriter grammy"),
    "Phoenix,_Arizona": (["Category:Cities_in_the_United_States"], "geography",
                         "arizona desert sonoran"),
    "Phoenix_(mythology)": (["Category:Greek_mythology"], "religion", "bird rebirth ashes"),
    "Phoenix_Suns": (["Category:National_Basketball_Association_teams"], "sports",
                     "nba basketball arizona"),
    "St._Louis_Cardinals": (["Category:Major_League_Baseball_teams"], "sports",
                            "baseball mlb missouri inning"),
    "Northern_cardinal": (["Category:Birds_of_North_America"], "animals",
                          "songbird crest seeds"),
    "Cardinal_(Catholic_Church)": (["Category:Catholic_Church"], "religion",
                                   "pope conclave vatican"),
    "Saturn": (["Category:Planets_of_the_Solar_System"], "astronomy", "rings gas titan"),
    "Saturn_(mythology)": (["Category:Mythology"], "religion", "roman agriculture saturnalia"),
    "Saturn_Corporation": (["Category:Car_manufacturers"], "vehicles",
                           "general motors tennessee"),
    "Apache_Spark": (["Category:Big_data", "Category:Free_software"], "programming",
                     "cluster distributed dataframes"),
    "Electric_spark": (["Category:Physics"], "chemistry", "discharge voltage plasma"),
    # edited articles
    "The_Office_(U.S._season_8)": (
        ["Category:The_Office_(U.S._TV_series)_seasons"], "tv",
        "nbc scranton dunder mifflin andy bernard robert california sabre"),
    "Michael_Scott_(The_Office)": (
        ["Category:The_Office_(U.S._TV_series)"], "tv",
        "michael scott carell regional manager scranton dunder mifflin"),
    "Parks_and_Recreation": (["Category:NBC_network_shows", "Category:Workplace_comedy"], "tv",
                             "nbc pawnee leslie knope thursday american"),
    "30_Rock": (["Category:NBC_network_shows"], "tv", "nbc fey liz lemon american thursday"),
    "Linux": (["Category:Free_software"], "programming", "kernel torvalds distribution"),
    "Compiler": (["Category:Computer_science"], "programming", "parsing optimization"),
    "Git": (["Category:Programming_tools", "Category:Free_software"], "programming",
            "version control commits branches"),
    "Perl": (["Category:Programming_languages"], "programming", "wall regex scripting"),
    "Hadoop": (["Category:Big_data", "Category:Free_software"], "programming",
               "cluster distributed mapreduce"),
    "Jupiter": (["Category:Planets_of_the_Solar_System"], "astronomy", "giant storm moons"),
    "Venus": (["Category:Planets_of_the_Solar_System"], "astronomy", "clouds hottest"),
    "Solar_eclipse_of_August_21,_2017": (["Category:Solar_eclipses"], "astronomy",
                                         "totality corona shadow america"),
    "Telescope": (["Category:Astronomy"], "astronomy", "lens mirror optics"),
    "Los_Angeles_Lakers": (["Category:National_Basketball_Association_teams"], "sports",
                           "nba basketball angeles"),
    "Boston_Celtics": (["Category:National_Basketball_Association_teams"], "sports",
                       "nba basketball boston"),
    "New_York_Yankees": (["Category:Major_League_Baseball_teams"], "sports",
                         "baseball mlb york pitcher"),
    "Dallas_Cowboys": (["Category:National_Football_League_teams"], "sports",
                       "nfl quarterback touchdown dallas"),
    "Foo_Fighters": (["Category:American_rock_music_groups"], "music", "grohl seattle"),
    "Pearl_Jam": (["Category:Grunge_musical_groups"], "music", "vedder seattle grunge"),
    "Queen_(band)": (["Category:Rock_music"], "music", "queen london rhapsody"),
    "Fender_Stratocaster": (["Category:Musical_instruments"], "music", "strings fender pickups"),
    "Bald_eagle": (["Category:Birds_of_North_America"], "animals", "raptor talons"),
    "Blue_jay": (["Category:Birds_of_North_America"], "animals", "songbird crest acorns"),
    "Leopard": (["Category:Felines"], "animals", "cat spotted rosettes africa"),
    "Rainbow_trout": (["Category:Freshwater_fish"], "animals", "angling stream fins"),
    "King_cobra": (["Category:Snakes"], "animals", "snake venom reptile"),
    "Bali": (["Category:Islands_of_Indonesia"], "geography", "indonesia beaches temples"),
    "Orinoco": (["Category:Rivers_of_South_America"], "geography", "venezuela basin delta"),
    "Tucson,_Arizona": (["Category:Cities_in_the_United_States"], "geography",
                        "arizona desert sonoran"),
    "Banana": (["Category:Fruits"], "food", "tropical tree bunches"),
    "Espresso": (["Category:Coffee"], "food", "brewed beans crema"),
    "Snickers": (["Category:Confectionery_brands"], "food", "caramel peanuts chocolate bar"),
    "Orange_(fruit)": (["Category:Fruits"], "food", "citrus tree juice"),
    "Zeus": (["Category:Greek_mythology"], "religion", "olympus thunder titans"),
    "Athena": (["Category:Greek_mythology"], "religion", "wisdom athens warrior"),
    "Dalai_Lama": (["Category:Buddhism"], "religion", "tibet monastery compassion"),
    "Pope": (["Category:Catholic_Church"], "religion", "vatican rome bishop"),
    "Zen": (["Category:Buddhism"], "religion", "meditation koan enlightenment"),
    "Byte_magazine": (["Category:Computing"], "programming", "magazine articles"),
}
SHORT_TOPIC = "Dunder_Mifflin_Paper_Company"  # below the substantive-article threshold

SURFACES = {
    # surface -> (class, [(topic, prior, confidence)])
    "office": ("noun", [("Office", 0.62, 0.55), ("The_Office_(U.S._TV_series)", 0.28, 0.35),
                        ("The_Office_(UK_TV_series)", 0.10, 0.10)]),
    "jaguar": ("entity", [("Jaguar", 0.45, 0.40), ("Jaguar_Cars", 0.40, 0.45),
                          ("Jacksonville_Jaguars", 0.15, 0.15)]),
    "jaguars": ("entity", [("Jacksonville_Jaguars", 0.70, 0.75), ("Jaguar", 0.30, 0.25)]),
    "python": ("entity", [("Python_(programming_language)", 0.55, 0.60),
                          ("Pythonidae", 0.30, 0.25), ("Monty_Python", 0.15, 0.15)]),
    "apple": ("entity", [("Apple_Inc.", 0.60, 0.65), ("Apple", 0.35, 0.30),
                         ("Apple_Records", 0.05, 0.05)]),
    "mercury": ("entity", [("Mercury_(planet)", 0.40, 0.35), ("Mercury_(element)", 0.35, 0.40),
                           ("Freddie_Mercury", 0.25, 0.25)]),
    "java": ("entity", [("Java_(programming_language)", 0.50, 0.55), ("Java", 0.35, 0.30),
                        ("Java_coffee", 0.15, 0.15)]),
    "giants": ("entity", [("San_Francisco_Giants", 0.45, 0.50), ("New_York_Giants", 0.40, 0.35),
                          ("Giant", 0.15, 0.15)]),
    "bass": ("noun", [("Bass_guitar", 0.55, 0.60), ("Bass_(fish)", 0.45, 0.40)]),
    "chicago": ("entity", [("Chicago", 0.80, 0.85), ("Chicago_(band)", 0.12, 0.10),
                           ("Chicago_(musical)", 0.08, 0.05)]),
    "nirvana": ("entity", [("Nirvana_(band)", 0.55, 0.60), ("Nirvana", 0.45, 0.40)]),
    "amazon": ("entity", [("Amazon_(company)", 0.55, 0.60), ("Amazon_River", 0.35, 0.30),
                          ("Amazons", 0.10, 0.10)]),
    "eclipse": ("noun", [("Solar_eclipse", 0.60, 0.55), ("Eclipse_(software)", 0.40, 0.45)]),
    "ruby": ("entity", [("Ruby", 0.50, 0.45), ("Ruby_(programming_language)", 0.50, 0.55)]),
    "heat": ("noun", [("Heat", 0.65, 0.60), ("Miami_Heat", 0.35, 0.40)]),
    "rockets": ("entity", [("Rocket", 0.55, 0.50), ("Houston_Rockets", 0.45, 0.50)]),
    "mars": ("entity", [("Mars", 0.60, 0.55), ("Bruno_Mars", 0.25, 0.30),
                        ("Mars_(chocolate_bar)", 0.15, 0.15)]),
    "phoenix": ("entity", [("Phoenix,_Arizona", 0.60, 0.65), ("Phoenix_(mythology)", 0.25, 0.20),
                           ("Phoenix_Suns", 0.15, 0.15)]),
    "cardinals": ("entity", [("St._Louis_Cardinals", 0.60, 0.65),
                             ("Northern_cardinal", 0.25, 0.20),
                             ("Cardinal_(Catholic_Church)", 0.15, 0.15)]),
    "cardinal": ("noun", [("Northern_cardinal", 0.45, 0.40),
                          ("Cardinal_(Catholic_Church)", 0.35, 0.40),
                          ("St._Louis_Cardinals", 0.20, 0.20)]),
    "saturn": ("entity", [("Saturn", 0.65, 0.60), ("Saturn_(mythology)", 0.20, 0.20),
                          ("Saturn_Corporation", 0.15, 0.20)]),
    "spark": ("noun", [("Electric_spark", 0.55, 0.50), ("Apache_Spark", 0.45, 0.50)]),
    "seattle": ("entity", [("Seattle", 1.0, 1.0)]),
    "the": ("other", [("The_(band)", 0.5, 0.5), ("Definite_article", 0.5, 0.5)]),
}

# social user -> (platform, kb user, edited topics with edit counts)
USERS = {
    "officefan": ("twitter", "Officefan",
                  {"The_Office_(U.S._season_8)": 6, "Michael_Scott_(The_Office)": 3,
                   "Parks_and_Recreation": 2, "30_Rock": 1}),
    "coder": ("youtube", "Coder",
              {"Linux": 5, "Compiler": 2, "Git": 4, "Perl": 2, "Hadoop": 2}),
    "stargazer": ("flickr", "Stargazer",
                  {"Jupiter": 3, "Venus": 2, "Solar_eclipse_of_August_21,_2017": 4,
                   "Telescope": 2}),
    "hoopsfan": ("twitter", "Hoopsfan",
                 {"Los_Angeles_Lakers": 5, "Boston_Celtics": 3, "New_York_Yankees": 1,
                  "Dallas_Cowboys": 2}),
    "rocker": ("youtube", "Rocker",
               {"Foo_Fighters": 3, "Pearl_Jam": 4, "Queen_(band)": 2,
                "Fender_Stratocaster": 2}),
    "naturalist": ("flickr", "Naturalist",
                   {"Bald_eagle": 3, "Blue_jay": 2, "Leopard": 2, "Rainbow_trout": 2,
                    "King_cobra": 2}),
    "traveler": ("flickr", "Traveler",
                 {"Bali": 4, "Orinoco": 2, "Tucson,_Arizona": 3}),
    "foodie": ("youtube", "Foodie",
               {"Banana": 3, "Espresso": 4, "Snickers": 1, "Orange_(fruit)": 2}),
    "scholar": ("twitter", "Scholar",
                {"Zeus": 3, "Athena": 2, "Dalai_Lama": 2, "Pope": 2, "Zen": 3}),
}

# (user, kind, text, [(surface, gold)]); gold None means not labeled
TEXTS = [
    ("officefan", "tweet", "Watching the office tonight with a big bowl of popcorn",
     [("office", "The_Office_(U.S._TV_series)")]),
    ("officefan", "tweet", "@dwightfan the office finale still makes me cry #SeasonEight",
     [("office", "The_Office_(U.S._TV_series)")]),
    ("officefan", "tweet", "RT @nbc: Parks and the office back to back on Thursday",
     [("office", "The_Office_(U.S._TV_series)")]),
    ("officefan", "tweet", "That python sketch on the telly was brilliant http://t.co/x1",
     [("python", "Monty_Python")]),
    ("coder", "title", "Learning python in an afternoon", [("python",
                                                           "Python_(programming_language)")]),
    ("coder", "description", "A quick tour of python decorators and the standard library",
     [("python", "Python_(programming_language)")]),
    ("coder", "title", "Why java still runs the enterprise",
     [("java", "Java_(programming_language)")]),
    ("coder", "tag", "java", [("java", "Java_(programming_language)")]),
    ("coder", "title", "Ruby on the server in ten minutes",
     [("ruby", "Ruby_(programming_language)")]),
    ("coder", "description", "Setting up eclipse for plugin development",
     [("eclipse", "Eclipse_(software)")]),
    ("coder", "title", "Tuning spark jobs on a small cluster", [("spark", "Apache_Spark")]),
    ("coder", "description", "Deploying the demo to amazon with a single script",
     [("amazon", "Amazon_(company)")]),
    ("stargazer", "title", "mercury at dusk", [("mercury", "Mercury_(planet)")]),
    ("stargazer", "tag", "mars", [("mars", "Mars")]),
    ("stargazer", "description", "Mars and the moon in the same frame from the backyard",
     [("mars", "Mars")]),
    ("stargazer", "title", "The eclipse over the valley", [("eclipse", "Solar_eclipse")]),
    ("stargazer", "tag", "eclipse", [("eclipse", "Solar_eclipse")]),
    ("stargazer", "description", "saturn through the new scope, rings clearly visible",
     [("saturn", "Saturn")]),
    ("hoopsfan", "tweet", "What a comeback by the heat in the fourth quarter",
     [("heat", "Miami_Heat")]),
    ("hoopsfan", "tweet", "The rockets cannot miss from three tonight",
     [("rockets", "Houston_Rockets")]),
    ("hoopsfan", "tweet", "Phoenix is on a six game win streak", [("phoenix", "Phoenix_Suns")]),
    ("hoopsfan", "tweet", "The giants are moving the ball well this quarter",
     [("giants", "New_York_Giants")]),
    ("hoopsfan", "tweet", "Cardinals take the series with a walk off in the ninth",
     [("cardinals", "St._Louis_Cardinals")]),
    ("hoopsfan", "tweet", "The jaguars defense looks much better this year",
     [("jaguars", "Jacksonville_Jaguars")]),
    ("rocker", "title", "nirvana unplugged full set", [("nirvana", "Nirvana_(band)")]),
    ("rocker", "title", "Slap bass lesson for beginners", [("bass", "Bass_guitar")]),
    ("rocker", "description", "Cover of a classic by chicago with the full horn section",
     [("chicago", "Chicago_(band)")]),
    ("rocker", "title", "Mercury live at the stadium 1986", [("mercury", "Freddie_Mercury")]),
    ("rocker", "tag", "mars", [("mars", "Bruno_Mars")]),
    ("rocker", "description", "The story of the apple label and the band behind it",
     [("apple", "Apple_Records")]),
    ("naturalist", "title", "Jaguar resting in the shade", [("jaguar", "Jaguar")]),
    ("naturalist", "description", "A young python coiled on a branch near the nest",
     [("python", "Pythonidae")]),
    ("naturalist", "tag", "cardinal", [("cardinal", "Northern_cardinal")]),
    ("naturalist", "title", "Largemouth bass at the edge of the lake",
     [("bass", "Bass_(fish)")]),
    ("naturalist", "description", "Fog over the amazon at first light",
     [("amazon", "Amazon_River")]),
    ("traveler", "title", "Sunrise over java from the volcano rim", [("java", "Java")]),
    ("traveler", "description", "Three days on a boat down the amazon",
     [("amazon", "Amazon_River")]),
    ("traveler", "title", "Desert heat in phoenix", [("phoenix", "Phoenix,_Arizona")]),
    ("traveler", "tag", "chicago", [("chicago", "Chicago")]),
    ("foodie", "title", "Apple crumble the easy way", [("apple", "Apple")]),
    ("foodie", "description", "Baked apple slices with a cinnamon glaze",
     [("apple", "Apple")]),
    ("foodie", "title", "Java from bean to cup", [("java", "Java_coffee")]),
    ("foodie", "description", "Deep fried mars bars at the county fair",
     [("mars", "Mars_(chocolate_bar)")]),
    ("scholar", "tweet", "The path to nirvana begins with letting go", [("nirvana", "Nirvana")]),
    ("scholar", "tweet", "Reading about the giants who fought the gods of Olympus",
     [("giants", "Giant")]),
    ("scholar", "tweet", "Like the phoenix we rise from our own ashes",
     [("phoenix", "Phoenix_(mythology)")]),
    ("scholar", "tweet", "The amazon warriors in myth were no match for anyone",
     [("amazon", "Amazons")]),
    ("scholar", "tweet", "The cardinal spoke about the conclave today",
     [("cardinal", "Cardinal_(Catholic_Church)")]),
    ("scholar", "tweet", "Saturn devoured his children in the old story",
     [("saturn", "Saturn_(mythology)")]),
]

# Labeled but excluded: disagreement or no correct sense.
DISPUTED = [
    ("hoopsfan", "tweet", "Saw the heat index hit a record today", "heat",
     ["Heat", "Miami_Heat", "Heat"], "Heat"),
    ("rocker", "title", "Chicago in the rain", "chicago",
     ["Chicago", "Chicago_(band)", "Chicago"], "Chicago"),
    ("coder", "title", "Ruby slippers costume tutorial", "ruby",
     ["Ruby", "Ruby", "Ruby_(programming_language)"], "Ruby"),
    ("officefan", "tweet", "The office party was a disaster", "office",
     ["none", "none", "none"], "none"),
]

# Extra texts exercising the preprocessing rules and the language check.
EXTRA_TEXTS = [
    ("officefan", "tweet", "RT @jimhalpert: best prank ever #PrankWar #asdfqwer"),
    ("officefan", "tweet", "Ich habe heute keine Zeit für die Arbeit"),
    ("officefan", "tweet", "今日はとても良い天気ですね"),
    ("coder", "tag", "geo:lat=47.6"),
    ("coder", "title", "Screen recording MOV_0042.mp4 of the build"),
    ("stargazer", "title", "IMG_4521.JPG"),
    ("stargazer", "tag", "sunset.jpg"),
    ("stargazer", "description", "Long exposure of the night sky over the hills"),
    ("naturalist", "tag", "dsc_0193.jpg"),
    ("traveler", "description", "Notes from the trip are at https://example.org/trip"),
    ("foodie", "title", "Weeknight dinner ideas for busy people"),
    ("scholar", "tweet", "@friend thanks for the book recommendation!"),
]


def description(topic, domain, keywords, rng, sentences=22):
    specific = keywords.split()
    vocab = DOMAINS[domain].split()
    title = topic.replace("_", " ")
    parts = [f"{{{{Infobox {domain} | name = {title}}}}}",
             f"'''{title}''' is covered in this article.<ref>Reference for {title}</ref>"]
    for i in range(sentences):
        w = []
        for _ in range(6):
            r = rng.random()
            if r < 0.4:
                w.append(rng.choice(specific))
            elif r < 0.85:
                w.append(rng.choice(vocab))
            else:
                w.append(rng.choice(FILLER))
        if i % 5 == 0:
            w[2] = f"[[{w[2].capitalize()}|{w[2]}]]"
        parts.append(f"The {w[0]} and {w[1]} of {w[2]} shaped the {w[3]} with {w[4]} in {w[5]}.")
    return "\n".join(parts)


def write(path, text):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def candidates_field(surface):
    return " ".join(f"{t}={p},{c}" for t, p, c in SURFACES[surface][1])


def main():
    rng = random.Random(20130701)
    out = HERE / "fixture"

    graph = [f"# fixture knowledge graph: {len(CATEGORIES)} categories, "
             f"{len(TOPICS) + 1} topics"]
    for c in sorted(CATEGORIES):
        graph.append(" ".join(["C", c] + CATEGORIES[c]))
    topics = dict(TOPICS)
    topics[SHORT_TOPIC] = (["Category:The_Office_(U.S._TV_series)"], "tv", "paper")
    descriptions = []
    for t in sorted(topics):
        cats, domain, keywords = topics[t]
        graph.append(" ".join(["T", t] + cats))
        if t == SHORT_TOPIC:
            text = "'''Dunder Mifflin''' is a fictional paper company in Scranton."
        else:
            text = description(t, domain, keywords, rng)
        descriptions.append(json.dumps({"id": t, "text": text}, ensure_ascii=False))
    write(out / "graph.tsv", "\n".join(graph) + "\n")
    write(out / "descriptions.jsonl", "\n".join(descriptions) + "\n")

    edits = []
    day = 0
    for social in sorted(USERS):
        _, kb, edited = USERS[social]
        for topic, count in sorted(edited.items()):
            for i in range(count):
                day += 1
                ts = f"2012-{1 + day % 12:02d}-{1 + day % 28:02d}T{day % 24:02d}:15:00Z"
                edits.append((kb, topic, ts, "normal", 40 + 7 * i))
        # one revert and one minor edit per user, to topics outside their domain
        day += 1
        edits.append((kb, "Apple_Inc.", f"2012-06-{1 + day % 28:02d}T08:00:00Z", "revert", -120))
        edits.append((kb, "Chicago", f"2012-07-{1 + day % 28:02d}T09:00:00Z", "minor", 3))
    edits.append(("Officefan", SHORT_TOPIC, "2012-08-01T10:00:00Z", "normal", 55))
    edits.append(("Bystander", "Byte_magazine", "2012-09-01T10:00:00Z", "normal", 12))
    edits.sort()
    write(out / "edits.tsv", "".join(f"{u}\t{t}\t{ts}\t{k}\t{d}\n" for u, t, ts, k, d in edits))

    utterances = []
    gold = []
    counter = {}

    def add_text(user, kind, text):
        platform = USERS[user][0]
        counter[user] = counter.get(user, 0) + 1
        uid = f"{platform}-{user}-{counter[user]:03d}"
        utterances.append((uid, platform, kind, user, text))
        return uid, platform

    entity = 0
    for user, kind, text, labels in TEXTS:
        uid, platform = add_text(user, kind, text)
        for surface, g in labels:
            entity += 1
            gold.append((f"e{entity:03d}", uid, platform, kind, user, surface,
                         candidates_field(surface), " ".join([g] * 3), g))
    for user, kind, text, surface, ann, g in DISPUTED:
        uid, platform = add_text(user, kind, text)
        entity += 1
        gold.append((f"e{entity:03d}", uid, platform, kind, user, surface,
                     candidates_field(surface), " ".join(ann), g))
    for user, kind, text in EXTRA_TEXTS:
        add_text(user, kind, text)
    # A social account with no knowledge-base counterpart.
    utterances.append(("twitter-ghost-001", "twitter", "tweet", "ghost",
                       "Watching the office again tonight"))
    # Same person on another platform, with different capitalization.
    utterances.append(("youtube-StarGazer-001", "youtube", "title", "StarGazer",
                       "Timelapse of mars rising over the ridge"))
    utterances.sort()
    write(out / "utterances.tsv",
          "".join("\t".join(u) + "\n" for u in utterances))
    write(out / "gold.tsv",
          "# entity_id\tutterance_id\tplatform\tkind\tuser\tsurface\tcandidates\tlabels\tgold\n" +
          "".join("\t".join(g) + "\n" for g in gold))

    cand_lines = []
    for surface in sorted(SURFACES):
        cls, cands = SURFACES[surface]
        cand_lines.append("\t".join([surface, cls] + [f"{t}={p},{c}" for t, p, c in cands]))
    write(out / "candidates.tsv", "\n".join(cand_lines) + "\n")

    write(out / "verification.tsv",
          "officefan\ttwitter\tsame-person\n"
          "coder\tyoutube\tsame-person\n"
          "StarGazer\tyoutube\tundetermined\n"
          "scholar\ttwitter\tsame-person\n")

    config = {
        "alpha": 0.5,
        "max_depth": 4,
        "min_nonstop_words": 100,
        "min_utterances": 100,
        "min_edits": 100,
        "frequency": "edits",
        "prune": {"min_document_frequency": 2, "max_document_fraction": 0.9},
        "bridge_mode": "casefold",
        "seeds": {"rc": 1, "ru": 2},
        "paths": {"graph": "graph.tsv", "descriptions": "descriptions.jsonl",
                  "edits": "edits.tsv", "utterances": "utterances.tsv",
                  "candidates": "candidates.tsv", "gold": "gold.tsv",
                  "verification": "verification.tsv", "output": "out"},
    }
    write(out / "config.json", json.dumps(config, indent=2) + "\n")

    make_fig4()
    make_ingest()


def make_fig4():
    out = HERE / "fig4"
    write(out / "graph.tsv",
          "# three topics, four categories\n"
          "C c1 c3\nC c2 c1\nC c3\nC c4 c3\n"
          "T t1 c2\nT t2 c2 c4\nT t3 c4\n")


WIKI = "https://wiki.example/w/api.php"
SOCIAL = "https://social.example"


def key(base, path, params):
    params = sorted(params)
    q = "&".join(f"{quote(k, safe='-_.~')}={quote(v, safe='-_.~')}" for k, v in params)
    return base + path + ("?" + q if q else "")


def wiki_key(params):
    return key(WIKI, "", params + [("format", "json"), ("formatversion", "2")])


def make_ingest():
    out = HERE / "ingest"
    entries = {}
    posts = {
        ("twitter", "officefan"): [
            ("1", "tweet", "Watching the office tonight with popcorn"),
            ("2", "tweet", "RT @nbc: the office is back on Thursday"),
            ("3", "tweet", "Season eight of the office has Andy in charge"),
            ("4", "tweet", "@pam that was the best cold open"),
        ],
        ("youtube", "quietuser"): [("a", "title", "My only video")],
        ("flickr", "ghost"): [(str(i), "tag", f"photo {i}") for i in range(5)],
    }
    for (platform, user), items in posts.items():
        body = {"posts": [{"id": i, "kind": k, "text": t} for i, k, t in items]}
        entries[key(SOCIAL, "/posts", [("platform", platform), ("user", user)])] = (
            json.dumps(body, ensure_ascii=False))

    contrib_base = [("action", "query"), ("list", "usercontribs"), ("ucuser", "Officefan"),
                    ("uclimit", "500"), ("ucdir", "newer"),
                    ("ucprop", "title|timestamp|comment|flags|sizediff")]

    def contrib(title, ts, comment, ns=0, minor=False, sizediff=10):
        return {"user": "Officefan", "ns": ns, "title": title, "timestamp": ts,
                "comment": comment, "minor": minor, "sizediff": sizediff}

    page1 = {"continue": {"uccontinue": "20120301000000|1003", "continue": "-||"},
             "query": {"usercontribs": [
                 contrib("The Office (U.S. season 8)", "2012-01-05T10:00:00Z", "plot summary"),
                 contrib("The Office (U.S. season 8)", "2012-02-05T10:00:00Z",
                         "Reverted edits by Vandal"),
                 contrib("Talk:The Office (U.S. season 8)", "2012-02-06T10:00:00Z",
                         "reply", ns=1)]}}
    page2 = {"query": {"usercontribs": [
        contrib("Michael Scott (The Office)", "2012-03-05T10:00:00Z", "fix typo", minor=True),
        contrib("Michael Scott (The Office)", "2012-03-07T10:00:00Z", "expand character arc"),
        contrib("Deleted article", "2012-03-08T10:00:00Z", "stub")]}}
    entries[wiki_key(contrib_base)] = json.dumps(page1)
    entries[wiki_key(contrib_base + [("uccontinue", "20120301000000|1003"),
                                     ("continue", "-||")])] = json.dumps(page2)
    entries[wiki_key([("action", "query"), ("list", "usercontribs"), ("ucuser", "Ghost"),
                      ("uclimit", "500"), ("ucdir", "newer"),
                      ("ucprop", "title|timestamp|comment|flags|sizediff")])] = json.dumps(
        {"error": {"code": "baduser_ucuser", "info": "Invalid value for user"}})

    rng = random.Random(7)
    pages = {
        "The Office (U.S. season 8)": (
            ["Category:The Office (U.S. TV series) seasons"], "tv",
            "nbc scranton dunder mifflin andy bernard sabre"),
        "Michael Scott (The Office)": (
            ["Category:The Office (U.S. TV series)"], "tv",
            "michael scott carell manager scranton"),
    }
    for title, (cats, domain, kw) in pages.items():
        body = {"query": {"pages": [{
            "ns": 0, "title": title,
            "revisions": [{"slots": {"main": {"content": description(title, domain, kw, rng)}}}],
            "categories": [{"ns": 14, "title": c} for c in cats]}]}}
        entries[wiki_key([("action", "query"), ("prop", "revisions|categories"),
                          ("titles", title), ("rvprop", "content"), ("rvslots", "main"),
                          ("cllimit", "max"), ("clshow", "!hidden")])] = json.dumps(body)
    entries[wiki_key([("action", "query"), ("prop", "revisions|categories"),
                      ("titles", "Deleted article"), ("rvprop", "content"),
                      ("rvslots", "main"), ("cllimit", "max"), ("clshow", "!hidden")])] = (
        json.dumps({"query": {"pages": [{"ns": 0, "title": "Deleted article",
                                         "missing": True}]}}))
    parents = {
        "Category:The Office (U.S. TV series) seasons": [
            "Category:The Office (U.S. TV series)", "Category:Television seasons"],
        "Category:The Office (U.S. TV series)": ["Category:NBC network shows"],
        "Category:Television seasons": ["Category:Television"],
        "Category:NBC network shows": ["Category:American television series"],
    }
    for cat, ps in parents.items():
        body = {"query": {"pages": [{"ns": 14, "title": cat,
                                     "categories": [{"ns": 14, "title": p} for p in ps]}]}}
        entries[wiki_key([("action", "query"), ("prop", "categories"), ("titles", cat),
                          ("cllimit", "max"), ("clshow", "!hidden")])] = json.dumps(body)

    write(out / "cassette.json",
          json.dumps({"entries": dict(sorted(entries.items()))}, indent=1,
                     ensure_ascii=False) + "\n")
    config = {
        "min_utterances": 3,
        "min_edits": 3,
        "paths": {"output": "out"},
        "ingest": {
            "mode": "replay",
            "wiki_endpoint": WIKI,
            "social_endpoint": SOCIAL,
            "cassette": "cassette.json",
            "category_depth": 2,
            "accounts": [
                {"platform": "twitter", "username": "officefan"},
                {"platform": "youtube", "username": "quietuser"},
                {"platform": "flickr", "username": "ghost"},
            ],
        },
    }
    write(out / "config.json", json.dumps(config, indent=2) + "\n")


if __name__ == "__main__":
    main()
