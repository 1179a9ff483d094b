import sys
from pathlib import Path

from dotenv import load_dotenv

# .env рядом с run.py имеет приоритет над текущим каталогом
env_path = Path(__file__).resolve().parent / '.env'
if env_path.exists():
    load_dotenv(env_path)
else:
    load_dotenv()

from presentation.cli.app import main  # noqa: E402  конфигурация читается после загрузки .env


if __name__ == "__main__":
    sys.exit(main())
