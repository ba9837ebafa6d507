import sys
from ui.app import App

if __name__ == "__main__":
    sys.exit(App().run(sys.argv[1:]))
